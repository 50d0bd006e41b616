#include "ulog/graded.hpp"

#include "ulog/xops.hpp"

namespace ulog {

namespace {

const ParamPoly kS = ParamPoly::symbol(Sym::s);
const ParamPoly kH = ParamPoly::symbol(Sym::H);

PSeries zero_x() { return PSeries(std::vector<ParamPoly>{}, kExact, "x"); }

PSeries inv_omega_prime(const BinomialFamily& fam) { return promote(inverse(derive(fam.omega))); }

bool all_zero(const GradedSeries& g) {
    for (const auto& s : g.grades)
        if (!s.is_zero()) return false;
    return true;
}

} // namespace

PSeries apply_ops(const std::vector<ElementaryOp>& ops, const PSeries& g) {
    PSeries r = g;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        switch (it->kind) {
        case OpKind::Mul: r = it->factor * r; break;
        case OpKind::Dx: r = derive(r); break;
        case OpKind::DOmega: r = d_omega(r, it->factor); break;
        case OpKind::L: r = zero_derivative(r); break;
        }
    }
    return r;
}

void GradedOperator::require_positive() const {
    for (const auto& p : parts)
        if (p.grade < 1)
            throw DomainError("graded inversion needs every part to raise the α^{-1} grade; found grade " +
                              std::to_string(p.grade));
}

GradedSeries GradedOperator::apply(const GradedSeries& g, int depth) const {
    GradedSeries out{g.exponent, std::vector<PSeries>(static_cast<std::size_t>(depth) + 1, zero_x())};
    for (int k = 0; k <= std::min(depth, g.depth()); ++k) {
        const PSeries& gk = g.grades[static_cast<std::size_t>(k)];
        if (gk.is_zero() && gk.order() >= 0) continue;
        for (const auto& part : parts) {
            const int target = k + part.grade;
            if (target > depth) continue;
            auto& slot = out.grades[static_cast<std::size_t>(target)];
            slot = slot + apply_ops(part.ops, gk).scaled(part.coeff);
        }
    }
    return out;
}

std::vector<GradedSeries> operator_powers(const GradedOperator& x, const GradedSeries& target, int depth) {
    x.require_positive();
    std::vector<GradedSeries> powers;
    GradedSeries cur = target;
    cur.grades.resize(static_cast<std::size_t>(depth) + 1, zero_x());
    for (int k = 0; k <= depth + 1 && !all_zero(cur); ++k) {
        powers.push_back(cur);
        cur = x.apply(cur, depth);
    }
    if (powers.empty()) powers.push_back(cur);
    return powers;
}

namespace {

GradedSeries weighted_sum(const std::vector<GradedSeries>& powers, int depth,
                          const std::function<Rational(int)>& weight) {
    GradedSeries out{powers.front().exponent, std::vector<PSeries>(static_cast<std::size_t>(depth) + 1, zero_x())};
    for (std::size_t k = 0; k < powers.size(); ++k) {
        const Rational w = weight(static_cast<int>(k));
        if (w == 0) continue;
        for (int g = 0; g <= depth; ++g)
            out.grades[static_cast<std::size_t>(g)] =
                out.grades[static_cast<std::size_t>(g)] + powers[k].grades[static_cast<std::size_t>(g)].scaled(ParamPoly(w));
    }
    return out;
}

} // namespace

GradedSeries graded_resolvent(const GradedOperator& x, const GradedSeries& target, int depth) {
    return weighted_sum(operator_powers(x, target, depth), depth, [](int) { return Rational(1); });
}

GradedSeries graded_log(const GradedOperator& x, const GradedSeries& target, int depth) {
    return weighted_sum(operator_powers(x, target, depth), depth,
                        [](int k) { return k == 0 ? Rational(0) : Rational(-1, k); });
}

AsymptoticSeries eval_at_zero(const GradedSeries& g, int depth) {
    std::vector<ParamPoly> c;
    for (int k = 0; k <= depth; ++k) c.push_back(k <= g.depth() ? g.grades[static_cast<std::size_t>(k)][0] : ParamPoly());
    return AsymptoticSeries(g.exponent, PSeries(std::move(c), depth, "1/a"));
}

AsymptoticSeries eval_at_shift(const GradedSeries& g, const ParamPoly& p, int depth) {
    std::vector<ParamPoly> c(static_cast<std::size_t>(depth) + 1);
    for (int k = 0; k <= std::min(depth, g.depth()); ++k) {
        const PSeries& gk = g.grades[static_cast<std::size_t>(k)];
        ParamPoly pj(1);
        for (int j = 0; k + j <= depth; ++j) {
            c[static_cast<std::size_t>(k + j)] += gk[j] * pj;
            pj *= p;
        }
    }
    return AsymptoticSeries(g.exponent, PSeries(std::move(c), depth, "1/a"));
}

GradedSeries operator_symbol(const BinomialFamily& fam, const AlphaDOperator& t, int depth, const PSeries* extra) {
    if (t.empty()) throw DomainError("empty operator description");
    int top = t.front().alpha_power;
    for (const auto& term : t) top = std::max(top, term.alpha_power);
    GradedSeries g{ParamPoly(Rational(top)), std::vector<PSeries>(static_cast<std::size_t>(depth) + 1, zero_x())};
    const PSeries omega = promote(fam.omega);
    for (const auto& term : t) {
        const int k = top - term.alpha_power;
        if (k > depth) continue;
        PSeries sym = compose(promote(term.d_series.renamed("x")), omega);
        if (extra) sym = sym * *extra;
        g.grades[static_cast<std::size_t>(k)] = g.grades[static_cast<std::size_t>(k)] + sym;
    }
    return g;
}

GradedOperator x_first_order(const BinomialFamily& fam) {
    GradedOperator x;
    x.parts.push_back({1, kS, {ElementaryOp::zero_derivative()}});
    x.parts.push_back({1, ParamPoly(-1), {ElementaryOp::d_omega(inv_omega_prime(fam))}});
    return x;
}

GradedOperator x_nested(const BinomialFamily& fam, int depth) {
    GradedOperator x;
    const PSeries iw = inv_omega_prime(fam);
    for (int j = 0; j < depth; ++j) {
        std::vector<ElementaryOp> ops(static_cast<std::size_t>(j), ElementaryOp::d_omega(iw));
        ops.push_back(ElementaryOp::zero_derivative());
        x.parts.push_back({1 + j, kS * Rational(j % 2 == 0 ? 1 : -1), std::move(ops)});
    }
    return x;
}

GradedOperator x_shifted(const BinomialFamily& fam, int depth) {
    GradedOperator x;
    const PSeries iw = inv_omega_prime(fam);
    for (int j = 0; j < depth; ++j) {
        std::vector<ElementaryOp> ops{ElementaryOp::d_omega(iw)};
        ops.insert(ops.end(), static_cast<std::size_t>(j), ElementaryOp::zero_derivative());
        x.parts.push_back({1 + j, -kS.pow(static_cast<unsigned>(j)), std::move(ops)});
    }
    return x;
}

GradedOperator x_sheffer(const BinomialFamily& fam, const QSeries& ell) {
    const QSeries lw = compose(ell, fam.omega);
    GradedOperator x;
    x.parts.push_back({1, kS,
                       {ElementaryOp::mul(promote(lw)), ElementaryOp::zero_derivative(),
                        ElementaryOp::mul(promote(inverse(lw)))}});
    x.parts.push_back({1, ParamPoly(-1), {ElementaryOp::d_omega(inv_omega_prime(fam))}});
    return x;
}

GradedSeries ratio_target(const BinomialFamily& fam, int depth, bool shift_h) {
    const int n_t = fam.f.order() - depth - 1;
    const QTable q = q_coeffs(fam, depth, n_t);
    const PSeries omega = promote(fam.omega);
    const PSeries F = pow_param(compose(fam.fprime, fam.omega), -kH);
    GradedSeries g{kH, {}};
    for (int n = 0; n <= depth; ++n) {
        const ParamPoly arg = shift_h ? kH + ParamPoly(1) : kH;
        const ParamPoly b = shift_h ? binomial(kH, n) : binomial(kH - ParamPoly(1), n);
        const PSeries qn = substitute(compose(q[n].renamed("x"), omega), Sym::s, arg);
        g.grades.push_back((qn * F).scaled(b));
    }
    return g;
}

AsymptoticSeries ratio_graded(const BinomialFamily& fam, int depth, RatioRoute route) {
    const bool first = route == RatioRoute::FirstOrder;
    const GradedOperator x = first ? x_first_order(fam) : x_nested(fam, depth);
    return eval_at_zero(graded_resolvent(x, ratio_target(fam, depth, first), depth), depth);
}

AsymptoticSeries conjugated_graded(const BinomialFamily& fam, const AlphaDOperator& t, int depth, bool shifted_form) {
    const GradedSeries target = operator_symbol(fam, t, depth);
    if (!shifted_form) return eval_at_zero(graded_resolvent(x_first_order(fam), target, depth), depth);
    return eval_at_shift(graded_resolvent(x_shifted(fam, depth), target, depth), kS, depth);
}

AsymptoticSeries LaurentPoly::expand(int depth) const {
    if (poly.is_zero()) return AsymptoticSeries(ParamPoly(), PSeries(std::vector<ParamPoly>{}, depth, "1/a"));
    return from_alpha_polynomial(poly, depth, shift);
}

LaurentPoly apply_alpha_d(const AlphaDOperator& t, const QSeries& poly) {
    int shift = 0;
    for (const auto& term : t) shift = std::max(shift, -term.alpha_power);
    QSeries acc(std::vector<Rational>{}, kExact, poly.var());
    for (const auto& term : t) {
        QSeries part(std::vector<Rational>{}, kExact, poly.var());
        QSeries d = poly;
        for (int j = 0; j <= poly.degree(); ++j) {
            if (j > 0) d = derive(d);
            const Rational c = term.d_series[j];
            if (c != 0) part = part + d.scaled(c);
        }
        acc = acc + part.shifted_up(term.alpha_power + shift);
    }
    return {acc, shift};
}

std::string describe(const AlphaDOperator& t) {
    std::string out;
    for (const auto& term : t) {
        if (!out.empty()) out += " + ";
        out += "a^" + std::to_string(term.alpha_power) + "*[" + term.d_series.to_string(6) + "](D)";
    }
    return out;
}

} // namespace ulog
