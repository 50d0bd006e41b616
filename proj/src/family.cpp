#include "ulog/family.hpp"

#include "ulog/xops.hpp"

namespace ulog {

namespace {

void require_admissible(const QSeries& f, const char* what) {
    if (f.order() < 1) throw TruncationError(std::string(what) + " must be known at least to order 1");
    if (f[0] != 0) throw DomainError(std::string(what) + " must have zero constant term");
    if (f[1] != 1) throw DomainError(std::string(what) + " must have unit linear coefficient");
}

void require_identity(const QSeries& composed, const char* what) {
    const QSeries x = QSeries::identity(kExact, composed.var());
    if ((composed - x).valuation() <= composed.order())
        throw DomainError(std::string("reversion cross-check failed: ") + what);
}

} // namespace

BinomialFamily build_family(const QSeries& f_in, int order) {
    require_admissible(f_in, "f");
    BinomialFamily fam;
    fam.order = order;
    fam.f = f_in.is_exact() ? f_in.truncated(order) : f_in.with_order(std::min(order, f_in.order()));
    fam.order = fam.f.order();
    fam.fprime = derive(fam.f);
    fam.phi = revert(fam.f);
    fam.tau_f = fam.f / fam.fprime;
    fam.omega = revert(fam.tau_f);
    require_identity(compose(fam.f, fam.phi), "f(f^inv(x)) = x");
    require_identity(compose(fam.tau_f, fam.omega), "(f/f')(omega(x)) = x");
    return fam;
}

QSeries tau_inverse(const QSeries& g) {
    require_admissible(g, "g");
    const QSeries h = g.shifted_down(1);
    const QSeries one = QSeries::constant(1, kExact, g.var());
    const QSeries log_deriv = (inverse(h) - one).shifted_down(1);
    return exp(integrate(log_deriv)).shifted_up(1);
}

PSequence p_seq(const BinomialFamily& fam, int n) {
    if (fam.phi.order() < n)
        throw TruncationError("p_seq: family known to order " + std::to_string(fam.phi.order()) +
                              ", requested " + std::to_string(n));
    // E = exp(α φ): E_m = (1/m) Σ_k k φ_k α E_{m-k}; the α-coefficients are
    // kept as dense rational vectors.
    std::vector<std::vector<Rational>> e(static_cast<std::size_t>(n) + 1);
    e[0] = {Rational(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<Rational> acc(static_cast<std::size_t>(m) + 1, Rational(0));
        for (int k = 1; k <= m; ++k) {
            const Rational w = fam.phi[k] * k;
            if (w == 0) continue;
            const auto& prev = e[static_cast<std::size_t>(m - k)];
            for (std::size_t j = 0; j < prev.size(); ++j) acc[j + 1] += w * prev[j];
        }
        for (auto& c : acc) c /= m;
        e[static_cast<std::size_t>(m)] = std::move(acc);
    }
    PSequence seq;
    for (int m = 0; m <= n; ++m) {
        const Rational fac(factorial(m));
        std::vector<Rational> c = e[static_cast<std::size_t>(m)];
        for (auto& v : c) v *= fac;
        seq.polys.push_back(QSeries::exact(std::move(c), "a"));
    }
    return seq;
}

QTable q_coeffs(const BinomialFamily& fam, int n_x, int n_t) {
    const int avail = fam.f.order() - n_x - 1;
    if (avail < n_t)
        throw TruncationError("q_coeffs: f known to order " + std::to_string(fam.f.order()) + " supports t-order " +
                              std::to_string(avail) + " for x-order " + std::to_string(n_x) + ", requested " +
                              std::to_string(n_t));
    // (f(x+t) - f(t)) / (x f'(t)) = Σ_m c_m(t) x^m with
    // c_m(t) = f^{(m+1)}(t) / ((m+1)! f'(t)).
    const QSeries f = fam.f.renamed("t");
    const QSeries fp_inv = inverse(derive(f)).truncated(n_t);
    std::vector<PSeries> u;
    for (int m = 0; m <= n_x; ++m) {
        std::vector<Rational> d;
        for (int j = m + 1; j <= f.order(); ++j) d.push_back(f[j] * binomial(Rational(j), m + 1));
        const QSeries dm(std::move(d), f.order() - m - 1, "t");
        u.push_back(promote((dm * fp_inv).truncated(n_t)));
    }
    // u^{-s} by the power recurrence with e = -s.
    const ParamPoly e1 = ParamPoly(1) - ParamPoly::symbol(Sym::s);
    std::vector<PSeries> v;
    v.push_back(PSeries::constant(ParamPoly(1), n_t, "t"));
    for (int n = 1; n <= n_x; ++n) {
        PSeries acc = PSeries(std::vector<ParamPoly>{}, n_t, "t");
        for (int k = 1; k <= n; ++k) {
            const ParamPoly w = e1 * ParamPoly(Rational(k)) - ParamPoly(Rational(n));
            acc = acc + (u[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(n - k)]).scaled(w);
        }
        v.push_back(acc.scaled(ParamPoly(Rational(1, n))));
    }
    QTable table;
    for (int n = 0; n <= n_x; ++n)
        table.by_n.push_back(v[static_cast<std::size_t>(n)].scaled(ParamPoly(Rational(factorial(n)))));
    return table;
}

std::vector<ParamPoly> q_at_zero(const BinomialFamily& fam, int n) {
    const QSeries x_over_f = inverse(fam.f.shifted_down(1));
    const PSeries pw = pow_param(x_over_f, ParamPoly::symbol(Sym::s));
    std::vector<ParamPoly> q;
    for (int k = 0; k <= n; ++k) q.push_back(pw[k] * Rational(factorial(k)));
    return q;
}

GradedTSeries p_H_t(const BinomialFamily& fam, int n) {
    const int n_t = fam.f.order() - n - 1;
    const QTable q = q_coeffs(fam, n, n_t);
    const ParamPoly H = ParamPoly::symbol(Sym::H);
    GradedTSeries out;
    out.exponent = H;
    for (int k = 0; k <= n; ++k) {
        const PSeries qk = substitute(q[k], Sym::s, H);
        out.grades.push_back(qk.scaled(binomial(H - ParamPoly(1), k)));
    }
    return out;
}

AsymptoticSeries p_H_t_at_zero(const GradedTSeries& pht, const Rational& H) {
    std::vector<ParamPoly> c;
    for (const auto& g : pht.grades) c.push_back(g[0].specialize(Sym::H, H));
    return AsymptoticSeries(pht.exponent.specialize(Sym::H, H),
                            PSeries(std::move(c), static_cast<int>(pht.grades.size()) - 1, "1/a"));
}

AsymptoticSeries p_symbolic(const BinomialFamily& fam, int n) {
    const std::vector<ParamPoly> q = q_at_zero(fam, n);
    const ParamPoly s = ParamPoly::symbol(Sym::s);
    std::vector<ParamPoly> c;
    for (int k = 0; k <= n; ++k) c.push_back(binomial(s - ParamPoly(1), k) * q[static_cast<std::size_t>(k)]);
    return AsymptoticSeries(s, PSeries(std::move(c), n, "1/a"));
}

AsymptoticSeries ratio_P_direct(const BinomialFamily& fam, int s, int H, int n) {
    if (s < 0 || s + H < 0) throw DomainError("ratio_P_direct needs s >= 0 and s + H >= 0");
    const PSequence seq = p_seq(fam, std::max(s, s + H));
    const AsymptoticSeries num = from_alpha_polynomial(seq.polys[static_cast<std::size_t>(s + H)], n);
    const AsymptoticSeries den = from_alpha_polynomial(seq.polys[static_cast<std::size_t>(s)], n);
    return num / den;
}

std::vector<ParamPoly> ratio_P_symbolic(const BinomialFamily& fam, int depth) {
    const ParamPoly s = ParamPoly::symbol(Sym::s);
    const ParamPoly H = ParamPoly::symbol(Sym::H);
    const int n_t = fam.f.order() - depth - 1;
    const QTable q = q_coeffs(fam, depth, n_t);
    const PSeries omega = promote(fam.omega);
    const PSeries inv_wp = promote(inverse(derive(fam.omega)));
    const PSeries F = pow_param(compose(fam.fprime, fam.omega), -H);

    std::vector<ParamPoly> P(static_cast<std::size_t>(depth) + 1);
    for (int m = 0; m <= depth; ++m) {
        // g = q_m^{ω(x)}(1+H) f'(ω(x))^{-H}; apply (sL - d/dω)^k for k <= depth - m.
        PSeries g = substitute(compose(q[m].renamed("x"), omega), Sym::s, ParamPoly(1) + H) * F;
        for (int k = 0; m + k <= depth; ++k) {
            P[static_cast<std::size_t>(m + k)] += binomial(H, m) * g[0];
            if (m + k == depth) break;
            g = zero_derivative(g).scaled(s) - d_omega(g, inv_wp);
        }
    }
    return P;
}

} // namespace ulog
