#include "ulog/sheffer.hpp"

#include "ulog/xops.hpp"

namespace ulog {

namespace {

const ParamPoly kS = ParamPoly::symbol(Sym::s);

Rational poly_at(const QSeries& p, const Rational& x) {
    Rational acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeffs()[static_cast<std::size_t>(k)];
    return acc;
}

} // namespace

QSeries apply_d_series(const QSeries& c, const QSeries& poly) {
    if (!poly.is_exact()) throw DomainError("D-series act on polynomials only");
    const int deg = poly.degree();
    if (c.order() < deg)
        throw TruncationError("D-series known to order " + std::to_string(c.order()) + ", polynomial degree " +
                              std::to_string(deg));
    QSeries acc(std::vector<Rational>{}, kExact, poly.var());
    QSeries d = poly;
    for (int j = 0; j <= deg; ++j) {
        if (j > 0) d = derive(d);
        if (c[j] != 0) acc = acc + d.scaled(c[j]);
    }
    return acc;
}

ShefferFamily tau_seq(const BinomialFamily& fam, const QSeries& ell, int n) {
    if (ell[0] != 1) throw DomainError("ℓ must have constant term 1");
    ShefferFamily sf;
    sf.fam = fam;
    sf.ell = ell;
    const PSequence seq = p_seq(fam, n);
    for (const auto& p : seq.polys) sf.tau_polys.push_back(apply_d_series(ell, p));

    // D^j α^{s-k} = (s-k)_j α^{s-k-j}.
    const std::vector<ParamPoly> q = q_at_zero(fam, n);
    std::vector<ParamPoly> grades(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const ParamPoly bq = binomial(kS - ParamPoly(1), k) * q[static_cast<std::size_t>(k)];
        for (int j = 0; k + j <= n; ++j) {
            if (ell[j] == 0) continue;
            grades[static_cast<std::size_t>(k + j)] += bq * falling(kS - ParamPoly(Rational(k)), j) * ell[j];
        }
    }
    sf.tau_symbolic = AsymptoticSeries(kS, PSeries(std::move(grades), n, "1/a"));
    return sf;
}

bool generating_function_check(const ShefferFamily& sf, int n) {
    // [α^j] ℓ(φ) e^{αφ} = ℓ(φ) φ^j / j!.
    const QSeries lphi = compose(sf.ell, sf.fam.phi).truncated(n);
    QSeries phij = QSeries::constant(1, kExact);
    for (int j = 0; j <= n; ++j) {
        if (j > 0) phij = (phij * sf.fam.phi).truncated(n).scaled(Rational(1, j));
        const QSeries term = (lphi * phij).truncated(n);
        for (int m = 0; m <= n; ++m) {
            const QSeries& tau = sf.tau_polys.at(static_cast<std::size_t>(m));
            if (tau[j] / Rational(factorial(m)) != term[m]) return false;
        }
    }
    return true;
}

bool symbolic_specializes(const ShefferFamily& sf, int n_max) {
    const int depth = sf.tau_symbolic.order();
    for (int n = 0; n <= n_max; ++n) {
        const AsymptoticSeries at = sf.tau_symbolic.specialize(Sym::s, Rational(n));
        const QSeries& tau = sf.tau_polys.at(static_cast<std::size_t>(n));
        for (int k = 0; k <= depth; ++k) {
            const Rational expected = k <= n ? tau[n - k] : Rational(0);
            if (at.plain(k) != ParamPoly(expected)) return false;
        }
    }
    return true;
}

bool theta_check(const ShefferFamily& sf, int n_max) {
    const QSeries ell = sf.ell.renamed("a");
    const QSeries ell_inv = inverse(ell);
    const QSeries tau_f = sf.fam.tau_f.renamed("a");
    for (int n = 0; n <= n_max; ++n) {
        const QSeries& tau = sf.tau_polys.at(static_cast<std::size_t>(n));
        const QSeries inner = apply_d_series(tau_f, apply_d_series(ell_inv, tau)).shifted_up(1);
        const QSeries out = apply_d_series(ell, inner);
        if (out != tau.scaled(Rational(n))) return false;
    }
    return true;
}

ResolventReport sheffer_resolvent_check(const ShefferFamily& sf, const AlphaDOperator& t, int s, int depth) {
    if (s < 1) throw DomainError("the Sheffer resolvent needs s >= 1");
    const QSeries& prev = sf.tau_polys.at(static_cast<std::size_t>(s - 1));
    const QSeries& cur = sf.tau_polys.at(static_cast<std::size_t>(s));
    ResolventReport rep;
    const AsymptoticSeries top = AsymptoticSeries::power(ParamPoly(1)) * apply_alpha_d(t, prev).expand(depth);
    rep.lhs = top / from_alpha_polynomial(cur, depth);

    const BinomialFamily& fam = sf.fam;
    const PSeries extra = promote(compose(sf.ell, fam.omega) * compose(fam.fprime, fam.omega));
    const GradedSeries target = operator_symbol(fam, t, depth, &extra);
    const GradedOperator x = x_sheffer(fam, sf.ell);
    x.require_positive();
    rep.rhs = eval_at_zero(graded_resolvent(x, target, depth), depth).specialize(Sym::s, Rational(s));
    rep.first_diff = first_difference(rep.lhs, rep.rhs, depth);
    rep.passed = rep.first_diff < 0;
    return rep;
}

ShefferFamily bernoulli_type(int order, int n) {
    const QSeries f = exp(QSeries::identity(order)) - QSeries::constant(1, kExact);
    const BinomialFamily fam = build_family(f, order);
    return tau_seq(fam, inverse(fam.f.shifted_down(1)), n);
}

namespace {

// (1/s) ln(α^{-s} B) for B = α^s(1 + O(α^{-1})), coefficients α^0..α^{-depth}.
std::vector<ParamPoly> normalized_log(const AsymptoticSeries& b, int depth) {
    const AsymptoticSeries lg = log(AsymptoticSeries(ParamPoly(), b.body()));
    std::vector<ParamPoly> out;
    for (int k = 0; k <= depth; ++k) out.push_back(lg[k][0].divide_by_symbol(Sym::s));
    return out;
}

CandidateReport compare(std::string name, const std::vector<ParamPoly>& lhs, const std::vector<ParamPoly>& rhs) {
    CandidateReport c;
    c.name = std::move(name);
    c.lhs = lhs;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        if (lhs[k] == rhs[k]) ++c.matching;
        else c.diffs.push_back({static_cast<int>(k), lhs[k], rhs[k]});
    }
    return c;
}

} // namespace

BernoulliReport bernoulli_log_experiment(int depth) {
    const int order = depth + 4;
    const QSeries e1 = (exp(QSeries::identity(order + 1)) - QSeries::constant(1, kExact)).shifted_down(1);
    const QSeries m1 = inverse(e1);  // x/(e^x - 1)

    GradedOperator x;
    x.parts.push_back({1, ParamPoly(-1), {ElementaryOp::dx()}});
    x.parts.push_back({1, kS, {ElementaryOp::mul(promote(m1)), ElementaryOp::zero_derivative(), ElementaryOp::mul(promote(e1))}});
    const GradedSeries target{ParamPoly(), {promote(m1)}};
    const AsymptoticSeries r = eval_at_zero(graded_log(x, target, depth), depth);

    BernoulliReport rep;
    rep.depth = depth;
    std::vector<ParamPoly> rhs;
    for (int k = 0; k <= depth; ++k) rhs.push_back(r.plain(k));
    rep.rhs = rhs;

    const ShefferFamily sf = bernoulli_type(order + 2, depth);
    rep.candidates.push_back(compare("tau: f = e^x-1, l = x/(e^x-1)", normalized_log(sf.tau_symbolic, depth), rhs));

    std::vector<ParamPoly> classical;
    for (int k = 0; k <= depth; ++k) classical.push_back(binomial(kS, k) * (m1[k] * Rational(factorial(k))));
    const AsymptoticSeries bs(kS, PSeries(std::move(classical), depth, "1/a"));
    rep.candidates.push_back(compare("classical: sum binom(s,k) B_k a^(s-k)", normalized_log(bs, depth), rhs));

    rep.note = "operator side taken as displayed: d/dx and x/(e^x-1) in x, where the general identity has d/domega "
               "and l(omega(x))";
    return rep;
}

TnEllTrend tn_ell_trend(const ShefferFamily& sf, const Rational& alpha, const std::vector<int>& s_values) {
    const BinomialFamily& fam = sf.fam;
    const QSeries omega = fam.omega.renamed("a");
    const QSeries t1 = build_Tn_ell(fam, sf.ell, 1, "a").apply(omega);
    TnEllTrend rep;
    rep.target = -to_high(alpha) * evaluate(t1, alpha, 1e-15).value;
    const HighPrec w = evaluate(omega, alpha, 1e-15).value;
    for (int s : s_values) {
        const QSeries& tau = sf.tau_polys.at(static_cast<std::size_t>(s));
        const Rational x = Rational(s) / alpha;
        const HighPrec v = s * (to_high(poly_at(derive(tau), x) / poly_at(tau, x)) - w);
        rep.samples.push_back({s, v, HighPrec(abs(v - rep.target))});
    }
    rep.decreasing = true;
    for (std::size_t i = 0; i + 1 < rep.samples.size(); ++i)
        if (!(rep.samples[i + 1].error < rep.samples[i].error)) rep.decreasing = false;
    return rep;
}

} // namespace ulog
