#include "ulog/stirling.hpp"

#include "ulog/diffop.hpp"
#include "ulog/graded.hpp"
#include "ulog/xops.hpp"

namespace ulog {

namespace {

const ParamPoly kS = ParamPoly::symbol(Sym::s);
const ParamPoly kH = ParamPoly::symbol(Sym::H);

// Series are evaluated with tail bound below this; the checks look at errors
// many orders of magnitude larger.
constexpr double kEvalTol = 1e-20;

QSeries in_alpha(const QSeries& u) { return u.renamed("a"); }

Rational poly_at(const QSeries& p, const Rational& x) {
    Rational acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeffs()[static_cast<std::size_t>(k)];
    return acc;
}

QSeries nth_derivative(QSeries u, int n) {
    for (int k = 0; k < n; ++k) u = derive(u);
    return u;
}

// Common range of two series, compared coefficientwise.
bool same_to(const QSeries& a, const QSeries& b, int order) {
    for (int k = 0; k <= order; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

} // namespace

std::vector<QSeries> log_deriv_expansion(const BinomialFamily& fam, int n_max) {
    const QSeries omega = in_alpha(fam.omega);
    std::vector<QSeries> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(build_Tn(fam, n, TnRoute::Nu, "a").apply(omega));
    return out;
}

StirlingExpansion stirling_terms(const BinomialFamily& fam, int n_max) {
    const std::vector<QSeries> tw = log_deriv_expansion(fam, n_max);
    StirlingExpansion ex;
    ex.g.resize(static_cast<std::size_t>(n_max) + 2, QSeries(std::vector<Rational>{}, kExact, "a"));

    // n = 0: -s ω(α)/α² = -s/α - s Σ_{j>=2} ω_j α^{j-2}. The 1/α part gives
    // s ln(s/α) (constant s ln s fixed by f = x); the rest integrates to
    // -s α^{-1} Σ ω_j α^j/(j-1).
    const QSeries& omega = tw[0];
    std::vector<Rational> ic(static_cast<std::size_t>(std::min(omega.order(), omega.stored() + 1)) + 1, Rational(0));
    for (int j = 2; j < static_cast<int>(ic.size()); ++j) ic[static_cast<std::size_t>(j)] = omega[j] / (j - 1);
    ex.integral_term = QSeries(ic, omega.order(), "a");
    const QSeries direct = integrate(log(compose(in_alpha(fam.fprime), omega)));
    const int common = std::min(direct.order(), ex.integral_term.order());
    if (!same_to(direct, ex.integral_term, common))
        throw MismatchError("integral term: termwise ω integration disagrees with ∫ ln f'(ω)");
    ex.g[1] = -ex.integral_term.shifted_down(1);

    for (int n = 1; n <= n_max; ++n) {
        QSeries term = tw[static_cast<std::size_t>(n)];
        if (n < 2) {
            if (term.valuation() < 2 - n)
                throw DomainError("α^{-1} resonance in term " + std::to_string(n) + " of the logarithmic derivative");
            term = term.shifted_down(2 - n);
        } else {
            term = term.shifted_up(n - 2);
        }
        if (n % 2 == 0) term = -term;  // (-1)^{1-n}
        ex.g[static_cast<std::size_t>(n) + 1] = integrate(term);
    }
    return ex;
}

QSeries closed_form_g3(const BinomialFamily& fam) {
    const QSeries a = QSeries::identity(kExact, "a");
    const QSeries w1 = derive(in_alpha(fam.omega));
    const QSeries w2 = derive(w1), w3 = derive(w2);
    const QSeries iw = inverse(w1);
    const QSeries one = QSeries::constant(1, kExact, "a");
    QSeries b = ((w1 - one) * iw).scaled(2);
    b = b + (a * a * w2 * w2 * iw * iw * iw).scaled(4);
    b = b - (a * w2 * iw * iw).scaled(2);
    b = b - (a * a * w3 * iw * iw).scaled(3);
    return b.scaled(Rational(1, 24));
}

QSeries closed_form_g4(const BinomialFamily& fam) {
    const QSeries a = QSeries::identity(kExact, "a");
    const QSeries iw = inverse(derive(in_alpha(fam.omega)));
    const QSeries u = a * iw;
    return (a * a * a * iw * nth_derivative(u, 4)).scaled(Rational(-1, 48));
}

namespace {

// (1/s) ln(α^{-s} p_s(α)), coefficients of α^0..α^{-depth} in Q[s].
std::vector<ParamPoly> normalized_log(const BinomialFamily& fam, int depth) {
    const AsymptoticSeries ps = p_symbolic(fam, depth);
    const AsymptoticSeries body_only(ParamPoly(), ps.body());
    const AsymptoticSeries lg = log(body_only);
    std::vector<ParamPoly> out;
    for (int k = 0; k <= depth; ++k) {
        const LogPoly c = lg[k];
        if (c.log_degree() > 0) throw DomainError("unexpected ln α in the normalized logarithm");
        out.push_back(c[0].divide_by_symbol(Sym::s));
    }
    return out;
}

} // namespace

IdentityReport verify_log_identity(const BinomialFamily& fam, LogIdentity which, int depth) {
    IdentityReport rep;
    const std::vector<ParamPoly> lhs = normalized_log(fam, depth);
    std::vector<ParamPoly> rhs;
    if (which == LogIdentity::OperatorLog) {
        GradedSeries target{ParamPoly(), {promote(fam.omega.shifted_down(1))}};
        const AsymptoticSeries r = eval_at_zero(graded_log(x_first_order(fam), target, depth), depth);
        for (int k = 0; k <= depth; ++k) rhs.push_back(r.plain(k));
    } else {
        const QSeries x_over_f = inverse(fam.f.shifted_down(1));
        const PSeries h = promote(fam.fprime * x_over_f);
        PSeries y = h;
        // c_0 is the coefficient of ln α, which the left side carries as 1.
        if (y[0] != ParamPoly(1)) throw MismatchError("xf'/f must start with 1");
        rhs.push_back(ParamPoly());
        for (int m = 1; m <= depth; ++m) {
            y = derive(y) - (h * zero_derivative(y)).scaled(kS);
            // ∂_α^m ln α / m! = (-1)^{m-1} α^{-m} / m.
            rhs.push_back(y[0] * Rational(m % 2 == 1 ? 1 : -1, m));
        }
    }
    rep.passed = true;
    rep.lhs = lhs;
    rep.rhs = rhs;
    for (int k = 0; k <= depth; ++k) {
        if (lhs[static_cast<std::size_t>(k)] != rhs[static_cast<std::size_t>(k)]) {
            rep.passed = false;
            rep.diffs.push_back({k, lhs[static_cast<std::size_t>(k)], rhs[static_cast<std::size_t>(k)]});
        }
    }
    return rep;
}

InvarianceReport invariance_check(const QSeries& f, const Rational& a, int order, int k_max) {
    const QSeries e = exp(QSeries::monomial(-a, 1, order));
    const BinomialFamily fam = build_family(f, order);
    const BinomialFamily tfam = build_family((f.truncated(order) * e).truncated(order), order);
    const QSeries x = QSeries::identity(kExact);
    const QSeries one_plus = QSeries::constant(1, kExact) + x.scaled(a);
    const QSeries beta = (x * inverse(one_plus, order)).truncated(order);

    InvarianceReport rep;
    const QSeries omega_b = compose(fam.omega, beta);
    rep.omega_matches = same_to(tfam.omega, omega_b, std::min(tfam.omega.order(), omega_b.order()));

    const StirlingExpansion g = stirling_terms(fam, k_max - 1);
    const StirlingExpansion tg = stirling_terms(tfam, k_max - 1);
    const QSeries beta_a = beta.renamed("a");
    const QSeries ln1p = log(one_plus.renamed("a"), order);
    rep.order = order;
    for (int k = 1; k <= k_max; ++k) {
        const QSeries lhs = tg.term(k);
        const QSeries rhs = compose(g.term(k), beta_a);
        const int common = std::min(lhs.order(), rhs.order());
        rep.order = std::min(rep.order, common);
        const QSeries diff = (lhs - rhs).truncated(common);
        QSeries expected(std::vector<Rational>{}, kExact, "a");
        if (k == 1) expected = ln1p;
        if (k == 2) expected = -ln1p;
        rep.terms.push_back({k, diff.valuation() > common, same_to(diff, expected, common)});
    }
    return rep;
}

LimitReport limit_check(const BinomialFamily& fam, LimitKind which, const Rational& alpha, int n_min, int n_max,
                        int step) {
    const Rational inv = 1 / alpha;
    const PSequence seq = p_seq(fam, which == LimitKind::First ? n_max + 1 : n_max);
    LimitReport rep;
    switch (which) {
    case LimitKind::Conclusion:
        rep.quantity = "p_n'(n a)/p_n(n a)";
        rep.target_text = "omega(1/a)";
        rep.target = evaluate(fam.omega, inv, kEvalTol).value;
        break;
    case LimitKind::First:
        rep.quantity = "p_{n+1}(n a)/(n p_n(n a))";
        rep.target_text = "a/f'(omega(1/a))";
        rep.target = to_high(alpha) / evaluate(compose(fam.fprime, fam.omega), inv, kEvalTol).value;
        break;
    case LimitKind::Second:
        rep.quantity = "ln p_n(n a) - n ln(n a) + n a I(1/a)";
        rep.target_text = "ln(omega'(1/a))/2";
        rep.target = boost::multiprecision::log(evaluate(derive(fam.omega), inv, kEvalTol).value) / 2;
        break;
    }
    const HighPrec integral = which == LimitKind::Second
                                  ? evaluate(integrate(log(compose(fam.fprime, fam.omega))), inv, kEvalTol).value
                                  : HighPrec(0);
    for (int n = n_min; n <= n_max; n += step) {
        const Rational x = alpha * n;
        const QSeries& pn = seq.polys[static_cast<std::size_t>(n)];
        HighPrec v;
        if (which == LimitKind::Conclusion) {
            v = to_high(poly_at(derive(pn), x) / poly_at(pn, x));
        } else if (which == LimitKind::First) {
            v = to_high(poly_at(seq.polys[static_cast<std::size_t>(n) + 1], x) / (poly_at(pn, x) * n));
        } else {
            v = log_rational(poly_at(pn, x)) - n * log_rational(x) + to_high(alpha * n) * integral;
        }
        rep.samples.push_back({n, v, HighPrec(abs(v - rep.target))});
    }
    rep.monotone = true;
    for (std::size_t i = 0; i + 1 < rep.samples.size(); ++i) {
        const HighPrec& e1 = rep.samples[i].error;
        const HighPrec& e2 = rep.samples[i + 1].error;
        rep.ratios.push_back(e2 == 0 ? HighPrec(0) : HighPrec(e1 / e2));
        if (!(e2 < e1)) rep.monotone = false;
    }
    return rep;
}

LimitReport second_ratio_limit(const BinomialFamily& fam, const Rational& alpha, int n_min, int n_max, int step) {
    const Rational inv = 1 / alpha;
    const PSequence seq = p_seq(fam, n_max + 1);
    const HighPrec fp = evaluate(compose(fam.fprime, fam.omega), inv, kEvalTol).value;
    const HighPrec w1 = evaluate(derive(fam.omega), inv, kEvalTol).value;
    const HighPrec w2 = evaluate(derive(derive(fam.omega)), inv, kEvalTol).value;
    const HighPrec a = to_high(alpha);
    LimitReport rep;
    rep.quantity = "p_{n+1}(n a)/p_n(n a) - n a/f'(omega(1/a))";
    rep.target_text = "(a/2)/f'(omega(1/a)) (1 - omega'(1/a) + omega''(1/a)/(a omega'(1/a)))";
    rep.target = a / (2 * fp) * (1 - w1 + w2 / (a * w1));
    for (int n = n_min; n <= n_max; n += step) {
        const Rational x = alpha * n;
        const HighPrec v = to_high(poly_at(seq.polys[static_cast<std::size_t>(n) + 1], x) /
                                   poly_at(seq.polys[static_cast<std::size_t>(n)], x)) -
                           a * n / fp;
        rep.samples.push_back({n, v, HighPrec(abs(v - rep.target))});
    }
    rep.monotone = true;
    for (std::size_t i = 0; i + 1 < rep.samples.size(); ++i) {
        const HighPrec& e1 = rep.samples[i].error;
        const HighPrec& e2 = rep.samples[i + 1].error;
        rep.ratios.push_back(e2 == 0 ? HighPrec(0) : HighPrec(e1 / e2));
        if (!(e2 < e1)) rep.monotone = false;
    }
    return rep;
}

TwoOrdersReport ratio_two_orders(const BinomialFamily& fam, int order) {
    const QSeries omega = fam.omega.truncated(order).renamed("s");
    const PSeries F = pow_param(compose(fam.fprime.renamed("s"), omega), -kH);
    const QTable q = q_coeffs(fam, 1, fam.f.order() - 2);
    const PSeries s = PSeries::identity(kExact, "s");

    // Σ_k binom(H, n-k) (-1)^k s^{-1} T_k s q_{n-k}^{ω(s)}(1+H) F, n = 0, 1.
    auto qw = [&](int m) {
        return substitute(compose(q[m].renamed("s"), promote(omega)), Sym::s, kH + ParamPoly(1)).renamed("s");
    };
    const PSeries order0 = qw(0) * F;
    const DiffOperator t1 = build_Tn(fam, 1, TnRoute::Nu, "s");
    const PSeries t1_part = t1.apply(s * F).shifted_down(1);
    const PSeries order1 = (qw(1) * F).scaled(kH) - t1_part;

    const QSeries w1 = derive(omega), w2 = derive(w1);
    const QSeries one = QSeries::constant(1, kExact, "s");
    const PSeries one_minus = promote((one - w1).shifted_down(1));
    const PSeries closed1 = (one_minus * F).scaled(kH * kH * Rational(1, 2)) +
                            (promote(w2 * inverse(w1)) * F).scaled(kH * Rational(1, 2));
    const PSeries q1_closed = promote((one - w1).shifted_down(1) * inverse(w1)).scaled((kH + ParamPoly(1)) * Rational(1, 2));

    TwoOrdersReport rep;
    auto agree = [](const PSeries& a, const PSeries& b) {
        const int n = std::min(a.order(), b.order());
        for (int k = 0; k <= n; ++k)
            if (a[k] != b[k]) return false;
        return n >= 0;
    };
    rep.order0 = agree(order0, F);
    rep.order1 = agree(order1, closed1);
    rep.q1_closed_form = agree(qw(1), q1_closed);
    rep.machine_order1 = order1;
    rep.closed_order1 = closed1;
    return rep;
}

NuExampleReport nu_example_check(int n) {
    const int order = n + 6;
    const QSeries g = QSeries::identity(order) * exp(QSeries::monomial(Rational(-1), 1, order));
    const BinomialFamily fam = build_family(tau_inverse(g), order);
    const StirlingExpansion ex = stirling_terms(fam, 1);
    NuExampleReport rep;
    rep.s1_series = ex.term(1).truncated(n);
    rep.s0_series = ex.term(2).truncated(n);
    std::vector<Rational> e1(static_cast<std::size_t>(n) + 1), e0(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        Integer pw = 1;
        for (int k = 0; k < m - 1; ++k) pw *= m + 1;
        e1[static_cast<std::size_t>(m)] = -Rational(pw) / (Rational(factorial(m)) * m);
        Rational inner = 0;
        Integer mk = 1;
        for (int k = 0; k <= m; ++k) {
            inner += Rational(mk) / Rational(factorial(k));
            mk *= m;
        }
        e0[static_cast<std::size_t>(m)] = inner / (2 * m);
    }
    rep.s1_expected = QSeries(e1, n, "a");
    rep.s0_expected = QSeries(e0, n, "a");
    rep.s1_matches = rep.s1_series == rep.s1_expected;
    rep.s0_matches = rep.s0_series == rep.s0_expected;
    return rep;
}

StirlingNumericReport stirling_numeric(const BinomialFamily& fam, const Rational& alpha, int n1, int n2) {
    const StirlingExpansion ex = stirling_terms(fam, 2);
    const HighPrec g1 = evaluate(ex.term(1), alpha, kEvalTol).value;
    const HighPrec g2 = evaluate(ex.term(2), alpha, kEvalTol).value;
    const HighPrec g3 = evaluate(ex.term(3), alpha, kEvalTol).value;
    const PSequence seq = p_seq(fam, n2);
    auto error_at = [&](int n) {
        const Rational x = Rational(n) / alpha;
        const HighPrec exact = log_rational(poly_at(seq.polys[static_cast<std::size_t>(n)], x));
        const HighPrec approx = n * log_rational(x) + n * g1 + g2 + g3 / n;
        return HighPrec(abs(exact - approx));
    };
    StirlingNumericReport rep;
    rep.n1 = n1;
    rep.n2 = n2;
    rep.error1 = error_at(n1);
    rep.error2 = error_at(n2);
    rep.ratio = rep.error1 / rep.error2;
    return rep;
}

} // namespace ulog
