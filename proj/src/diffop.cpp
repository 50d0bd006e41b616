#include "ulog/diffop.hpp"

namespace ulog {

namespace {

template <class C>
Series<C> apply_impl(const DiffOperator& op, const Series<C>& g, const std::function<Series<C>(const QSeries&)>& lift) {
    Series<C> acc(std::vector<C>{}, kExact, g.var());
    Series<C> dg = g;
    for (int j = 0; j <= op.max_derivative(); ++j) {
        if (j > 0) dg = derive(dg);
        const QSeries& c = op.coeffs[static_cast<std::size_t>(j)];
        if (c.is_zero() && c.is_exact()) continue;
        acc = acc + lift(c) * dg;
    }
    return acc;
}

} // namespace

DiffOperator DiffOperator::identity(std::string var) {
    DiffOperator op;
    op.var = var;
    op.coeffs.push_back(QSeries::constant(1, kExact, std::move(var)));
    return op;
}

QSeries DiffOperator::apply(const QSeries& g) const {
    return apply_impl<Rational>(*this, g.renamed(var), [](const QSeries& c) { return c; });
}

PSeries DiffOperator::apply(const PSeries& g) const {
    return apply_impl<ParamPoly>(*this, g.renamed(var), [](const QSeries& c) { return promote(c); });
}

std::string DiffOperator::to_string(int max_terms) const {
    std::string out;
    for (int j = 0; j <= max_derivative(); ++j) {
        const QSeries& c = coeffs[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "\n";
        out += "[" + c.to_string(max_terms) + "]";
        if (j > 0) out += " d^" + std::to_string(j) + "/d" + var + "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

LetterValues letter_values(const BinomialFamily& fam, const std::string& var, const QSeries* ell) {
    LetterValues v;
    const QSeries omega = fam.omega.renamed(var);
    v.sigma = QSeries::identity(kExact, var) * inverse(derive(omega));
    v.lambda = ell ? compose(ell->renamed(var), omega) : QSeries::constant(1, kExact, var);
    return v;
}

DiffOperator realize(const NCPoly& p, const LetterValues& values) {
    const std::string& var = values.sigma.var();
    const QSeries lambda_inv = inverse(values.lambda);
    DiffOperator total;
    total.var = var;
    for (const auto& [word, c] : p.terms()) {
        std::vector<QSeries> op{QSeries::constant(c, kExact, var)};
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            switch (*it) {
            case Letter::Sigma:
            case Letter::Lambda:
            case Letter::LambdaInv: {
                const QSeries& m = *it == Letter::Sigma ? values.sigma
                                   : *it == Letter::Lambda ? values.lambda
                                                           : lambda_inv;
                for (auto& cj : op) cj = m * cj;
                break;
            }
            case Letter::D: {
                std::vector<QSeries> next(op.size() + 1, QSeries(std::vector<Rational>{}, kExact, var));
                for (std::size_t j = 0; j < op.size(); ++j) {
                    next[j] = next[j] + derive(op[j]);
                    next[j + 1] = next[j + 1] + op[j];
                }
                op = std::move(next);
                break;
            }
            case Letter::E: throw DomainError("realize: word contains E");
            }
        }
        if (total.coeffs.size() < op.size()) total.coeffs.resize(op.size(), QSeries(std::vector<Rational>{}, kExact, var));
        for (std::size_t j = 0; j < op.size(); ++j) total.coeffs[j] = total.coeffs[j] + op[j];
    }
    if (total.coeffs.empty()) total.coeffs.push_back(QSeries(std::vector<Rational>{}, kExact, var));
    return total;
}

DiffOperator build_Tn(const BinomialFamily& fam, int n, TnRoute route, const std::string& var) {
    if (n < 0) throw DomainError("T_n needs n >= 0");
    const NCPoly a0 = route == TnRoute::Nu ? shape_coefficients(nu_power(n)).at(0) : matrix_row(n).at(0);
    return realize(a0, letter_values(fam, var));
}

DiffOperator build_Tn_ell(const BinomialFamily& fam, const QSeries& ell, int n, const std::string& var) {
    if (n < 0) throw DomainError("T_n needs n >= 0");
    if (ell.order() < 0 || ell[0] != 1) throw DomainError("ℓ must have constant term 1");
    const NCPoly a0 = shape_coefficients(nu_power(n, true)).at(0);
    return realize(a0, letter_values(fam, var, &ell));
}

} // namespace ulog
