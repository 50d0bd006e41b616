#include "ulog/appendix.hpp"

#include <map>

namespace ulog {

namespace {

const ParamPoly kS = ParamPoly::symbol(Sym::s);

PSeries column_series(const Column& g) {
    std::vector<ParamPoly> c;
    for (std::size_t n = 0; n < g.size(); ++n) c.push_back(g[n] * Rational(1, factorial(static_cast<long>(n))));
    return PSeries(std::move(c), static_cast<int>(g.size()) - 1);
}

Column series_column(const PSeries& u, int n_max) {
    Column c;
    for (int n = 0; n <= n_max; ++n) c.push_back(u[n] * Rational(factorial(n)));
    return c;
}

AsymptoticSeries graded_sum(const ParamPoly& exponent, std::vector<ParamPoly> c) {
    const int depth = static_cast<int>(c.size()) - 1;
    return AsymptoticSeries(exponent, PSeries(std::move(c), depth, "1/a"));
}

} // namespace

Column conjugated_step_series(const BinomialFamily& fam, const Column& g) {
    if (g.size() < 2) throw TruncationError("conjugated step needs at least two coefficients");
    const int n = static_cast<int>(g.size()) - 1;
    if (fam.f.order() < n + 1) throw TruncationError("conjugated step: f known to order " + std::to_string(fam.f.order()));
    const QSeries f_over_y = fam.f.shifted_down(1).truncated(n);
    const PSeries up = pow_param(f_over_y, kS);
    const PSeries down = pow_param(inverse(f_over_y), kS);
    const PSeries tau_over_y = promote(fam.tau_f.shifted_down(1).truncated(n));

    const PSeries u = (up * column_series(g)).truncated(n);
    PSeries shifted = u;
    shifted = (shifted - PSeries::constant(u[0], kExact)).shifted_down(1);
    const PSeries lu = shifted * inverse(tau_over_y);
    const PSeries v = (lu.scaled(kS) - derive(u)) * down;
    return series_column(v, n - 1);
}

Column conjugated_step_law(const BinomialFamily& fam, const Column& g) {
    const int n = static_cast<int>(g.size()) - 1;
    const std::vector<ParamPoly> q = q_at_zero(fam, n);
    Column out;
    for (int m = 0; m < n; ++m) {
        const ParamPoly factor = (kS - ParamPoly(Rational(m + 1))) * Rational(1, m + 1);
        out.push_back(factor * (g[static_cast<std::size_t>(m) + 1] - g[0] * q[static_cast<std::size_t>(m) + 1]));
    }
    return out;
}

ConjugatedState conjugated_table(const BinomialFamily& fam, const Column& g0, int k_max) {
    if (static_cast<int>(g0.size()) <= k_max) throw TruncationError("conjugated table: column too short for k_max");
    ConjugatedState st;
    st.g_table.push_back(g0);
    for (int k = 1; k <= k_max; ++k) {
        const Column& prev = st.g_table.back();
        Column next = conjugated_step_series(fam, prev);
        if (next != conjugated_step_law(fam, prev))
            throw MismatchError("conjugated step: series route and coefficient law disagree at k = " + std::to_string(k));
        st.g_table.push_back(std::move(next));
    }
    return st;
}

bool prop_A2_check(const BinomialFamily& fam, const Column& g0, int n_max, int k_max) {
    const ConjugatedState st = conjugated_table(fam, g0, k_max);
    const std::vector<ParamPoly> q = q_at_zero(fam, n_max + k_max);
    const ParamPoly sm1 = kS - ParamPoly(1);
    auto g = [&](int k, int n) { return st.g_table[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)]; };
    for (int k = 0; k <= k_max; ++k)
        for (int n = 0; n <= n_max; ++n) {
            if (n + k >= static_cast<int>(g0.size())) throw TruncationError("prop A.2: column too short");
            ParamPoly lhs = binomial(sm1, n) * (g(k, n) - g(k, 0) * q[static_cast<std::size_t>(n)]);
            for (int m = 0; m <= k; ++m) lhs += binomial(sm1, n + m) * q[static_cast<std::size_t>(n + m)] * g(k - m, 0);
            if (lhs != binomial(sm1, n + k) * g(0, n + k)) return false;
        }
    return true;
}

EllReport ell_s(const BinomialFamily& fam, const Column& g0, int depth) {
    const ConjugatedState st = conjugated_table(fam, g0, depth);
    const std::vector<ParamPoly> q = q_at_zero(fam, depth);
    const ParamPoly sm1 = kS - ParamPoly(1);
    std::vector<ParamPoly> table, num, den;
    for (int k = 0; k <= depth; ++k) {
        table.push_back(st.g_table[static_cast<std::size_t>(k)][0]);
        num.push_back(binomial(sm1, k) * g0[static_cast<std::size_t>(k)]);
        den.push_back(binomial(sm1, k) * q[static_cast<std::size_t>(k)]);
    }
    EllReport rep;
    rep.from_table = graded_sum(ParamPoly(), table);
    rep.from_quotient = graded_sum(ParamPoly(), num) / graded_sum(ParamPoly(), den);
    rep.from_p_symbolic = AsymptoticSeries::power(ParamPoly(1)) * graded_sum(sm1, num) / p_symbolic(fam, depth);
    rep.agree = first_difference(rep.from_table, rep.from_quotient, depth) < 0 &&
                first_difference(rep.from_table, rep.from_p_symbolic, depth) < 0;
    return rep;
}

ClosedFormReport resolvent_closed_form(const BinomialFamily& fam, const QSeries& g, const Rational& s, int depth_x,
                                       int depth_a) {
    const int top = depth_a + depth_x + 1;
    for (int k = 0; k <= top + depth_x; ++k)
        if (Rational(k + 1) == s) throw DomainError("closed form: pole at k + 1 - s = 0");
    if (fam.f.order() < top + 2) throw TruncationError("closed form: f known to order " + std::to_string(fam.f.order()));

    ClosedFormReport rep;
    rep.s = s;

    // Left side: graded resolvent of X = sα^{-1}L - α^{-1}d/dω.
    const GradedSeries target{ParamPoly(), {promote(compose(g.truncated(fam.omega.order()), fam.omega))}};
    const GradedSeries lhs = graded_resolvent(x_first_order(fam), target, depth_a);

    // ℓ_s for g̃ = (y/f)^s g at the given s.
    const QSeries f_over_y = fam.f.shifted_down(1).truncated(top);
    auto at_s = [&](const ParamPoly& p) { return p.specialize(Sym::s, s).constant_term(); };
    const PSeries down = pow_param(inverse(f_over_y), ParamPoly(s));
    const PSeries up = pow_param(f_over_y, ParamPoly(s));
    const PSeries gt = (down * promote(g.truncated(top))).truncated(top);
    const std::vector<ParamPoly> qsym = q_at_zero(fam, top);
    std::vector<Rational> q, gk, num, den;
    for (int k = 0; k <= top; ++k) {
        const Rational fk(factorial(k));
        q.push_back(at_s(qsym[static_cast<std::size_t>(k)]));
        gk.push_back(at_s(gt[k]) * fk);
        const Rational b = binomial(s - 1, k);
        num.push_back(b * gk.back());
        den.push_back(b * q.back());
    }
    const QSeries ell = (QSeries(num, top, "1/a") * inverse(QSeries(den, top, "1/a"))).truncated(top);

    // α y Σ_{k,j} c_k/k! y^k (-αy)^j/j! ∫_0^1 t^{k-s}(1-t)^j dt, keyed by the α exponent.
    std::map<int, std::vector<Rational>> w;
    auto slot = [&](int e) -> std::vector<Rational>& {
        auto it = w.find(e);
        if (it == w.end()) it = w.emplace(e, std::vector<Rational>(static_cast<std::size_t>(depth_x) + 1, Rational(0))).first;
        return it->second;
    };
    for (int r = 0; r <= top; ++r) slot(-r)[0] += ell[r];
    for (int k = 0; 1 + k <= depth_x; ++k) {
        const Rational kf(factorial(k));
        for (int j = 0; 1 + k + j <= depth_x; ++j) {
            Rational beta = 0;
            for (int i = 0; i <= j; ++i) beta += binomial(Rational(j), i) * Rational(i % 2 == 0 ? 1 : -1) / (Rational(k + i + 1) - s);
            const Rational coef = beta * Rational(j % 2 == 0 ? 1 : -1) / (kf * Rational(factorial(j)));
            const int ydeg = 1 + k + j;
            for (int r = 0; r <= top; ++r) {
                Rational c = -ell[r] * q[static_cast<std::size_t>(k)];
                if (r == 0) c += gk[static_cast<std::size_t>(k)];
                if (c == 0) continue;
                const int e = 1 + j - r;
                if (e < -depth_a) continue;
                // (f/y)^s multiplies only this part; ℓ_s stands alone.
                std::vector<Rational>& dst = slot(e);
                for (int m = 0; ydeg + m <= depth_x; ++m) dst[static_cast<std::size_t>(ydeg + m)] += c * coef * at_s(up[m]);
            }
        }
    }

    rep.positive_powers_cancel = true;
    for (const auto& [e, coeffs] : w) {
        const QSeries in_y(coeffs, depth_x);
        const QSeries in_x = compose(in_y, fam.omega).truncated(depth_x);
        if (e > 0) {
            for (int m = 0; m <= depth_x; ++m)
                if (in_x[m] != 0) rep.positive_powers_cancel = false;
            continue;
        }
        if (-e > depth_a) continue;
        const PSeries& lg = lhs.grades.at(static_cast<std::size_t>(-e));
        for (int m = 0; m <= depth_x; ++m)
            if (at_s(lg[m]) != in_x[m]) ++rep.mismatches;
    }
    for (int a = 0; a <= depth_a; ++a)
        if (!w.count(-a)) {
            const PSeries& lg = lhs.grades.at(static_cast<std::size_t>(a));
            for (int m = 0; m <= depth_x; ++m)
                if (at_s(lg[m]) != 0) ++rep.mismatches;
        }
    rep.passed = rep.positive_powers_cancel && rep.mismatches == 0;
    return rep;
}

ConjugationReport conjugated_expectation(const BinomialFamily& fam, const AlphaDOperator& t, int s, int depth) {
    if (s < 1) throw DomainError("conjugation check needs s >= 1");
    const QSeries p = p_seq(fam, s).polys[static_cast<std::size_t>(s)];
    ConjugationReport rep;
    const LaurentPoly tp = apply_alpha_d(t, p.shifted_down(1));
    rep.lhs = AsymptoticSeries::power(ParamPoly(1)) * tp.expand(depth) / from_alpha_polynomial(p, depth);
    rep.rhs_zero = conjugated_graded(fam, t, depth, false).specialize(Sym::s, Rational(s));
    rep.rhs_shifted = conjugated_graded(fam, t, depth, true).specialize(Sym::s, Rational(s));
    rep.zero_form = first_difference(rep.lhs, rep.rhs_zero, depth) < 0;
    rep.shifted_form = first_difference(rep.lhs, rep.rhs_shifted, depth) < 0;
    return rep;
}

} // namespace ulog
