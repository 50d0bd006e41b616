#include "ulog/suites.hpp"

#include "ulog/appendix.hpp"
#include "ulog/diffop.hpp"
#include "ulog/family_spec.hpp"
#include "ulog/graded.hpp"
#include "ulog/ncpoly.hpp"
#include "ulog/propositions.hpp"
#include "ulog/sheffer.hpp"
#include "ulog/stirling.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace ulog {

namespace {

const ParamPoly kS = ParamPoly::symbol(Sym::s);

const BinomialFamily& family(const std::string& spec, int order) {
    static std::map<std::pair<std::string, int>, BinomialFamily> cache;
    static std::mutex lock;
    const std::lock_guard<std::mutex> hold(lock);
    const auto key = std::make_pair(spec, order);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_family(parse_family_spec(spec), order)).first;
    return it->second;
}

int order_at_least(const SuiteOptions& o, int needed) { return std::max(needed, o.order.value_or(needed)); }

// Coefficientwise equality over the range both series know (stored range
// for polynomials), capped at cap.
bool agree(const QSeries& a, const QSeries& b, int cap) {
    int top = std::min(a.order(), b.order());
    if (top >= kExact) top = std::max(a.stored(), b.stored()) - 1;
    top = std::min(top, cap);
    for (int k = 0; k <= top; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

bool same_operator(const DiffOperator& a, const DiffOperator& b, int cap) {
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    const QSeries zero(std::vector<Rational>{}, kExact, a.var);
    for (std::size_t j = 0; j < n; ++j) {
        const QSeries& x = j < a.coeffs.size() ? a.coeffs[j] : zero;
        const QSeries& y = j < b.coeffs.size() ? b.coeffs[j] : zero;
        if (!agree(x, y, cap)) return false;
    }
    return true;
}

std::string decimal(const HighPrec& v, int digits = 12) { return to_decimal(v, digits); }

std::string random_spec(std::uint32_t seed) {
    const QSeries f = random_polynomial_family(seed, 6);
    std::string out = "[";
    for (int k = 0; k <= 6; ++k) out += (k ? ", " : "") + to_string(f[k]);
    return out + "]";
}

AlphaDOperator op_one() { return {{0, QSeries::constant(1, kExact)}}; }
AlphaDOperator op_d() { return {{0, QSeries::monomial(1, 1, kExact)}}; }
AlphaDOperator op_alpha() { return {{1, QSeries::constant(1, kExact)}}; }
AlphaDOperator op_alpha_d2() { return {{1, QSeries::monomial(1, 2, kExact)}}; }

Json diffs_json(const std::vector<CoefficientDiff>& d) {
    Json out = Json::array();
    for (const auto& x : d) out.push_back(x.index);
    return out;
}

// ---------------------------------------------------------------------------

Report tn_suite(const SuiteOptions& o) {
    Report r;
    const NCWord s2{Letter::Sigma, Letter::D, Letter::D};
    r.add("T_0 = 1", nu_power(0) == NCPoly::word({Letter::E}) &&
                         shape_coefficients(nu_power(0))[0] == NCPoly::word({}));
    const NCPoly t1 = shape_coefficients(nu_power(1))[0];
    r.add("T_1 = (1/2) sigma D^2", t1 == NCPoly::word(s2, Rational(1, 2)), t1.to_string());

    using L = Letter;
    const NCPoly t2_display = NCPoly::word({L::Sigma, L::D, L::D, L::Sigma, L::D, L::D}, Rational(1, 4)) -
                              NCPoly::word({L::Sigma, L::D, L::Sigma, L::D, L::D, L::D}, Rational(1, 6)) +
                              NCPoly::word({L::Sigma, L::Sigma, L::D, L::D, L::D, L::D}, Rational(1, 24));
    const NCPoly t2 = shape_coefficients(nu_power(2))[0];
    r.add("T_2 three-term form", t2 == t2_display, t2.to_string());

    bool words = true;
    for (int n = 0; n <= 5; ++n) words = words && shape_coefficients(nu_power(n))[0] == matrix_row(n)[0];
    r.add("nu route = matrix route, words, n <= 5", words);

    const int order = order_at_least(o, 16);
    for (const std::string spec : {"exp1", "geom"}) {
        const BinomialFamily& fam = family(spec, order);
        const QSeries sigma = letter_values(fam, "s").sigma;
        const DiffOperator op1 = build_Tn(fam, 1);
        DiffOperator expected1{{QSeries(std::vector<Rational>{}, kExact, "s"), QSeries(std::vector<Rational>{}, kExact, "s"),
                                sigma.scaled(Rational(1, 2))},
                               "s"};
        r.add("T_1 realized, " + spec, same_operator(op1, expected1, order), op1.to_string(3));
        bool ops = true;
        for (int n = 0; n <= 5; ++n)
            ops = ops && same_operator(build_Tn(fam, n, TnRoute::Nu), build_Tn(fam, n, TnRoute::Matrix), order);
        r.add("nu route = matrix route, operators, n <= 5, " + spec, ops);
    }
    return r;
}

Report master_suite(const SuiteOptions& o) {
    Report r;
    const int depth = o.depth.value_or(8);
    const int order = order_at_least(o, depth + 4);
    for (const std::string& spec : {std::string("id"), std::string("exp1"), std::string("geom"), random_spec(o.seed)}) {
        const BinomialFamily& fam = family(spec, order);
        const IdentityReport a = verify_log_identity(fam, LogIdentity::OperatorLog, depth);
        Check& c = r.add("operator logarithm, " + spec, a.passed, "depth " + std::to_string(depth));
        c.diffs = a.diffs;
        Json coeffs = Json::array();
        for (const auto& p : a.lhs) coeffs.push_back(param_poly_json(p));
        c.values["coefficients"] = coeffs;
        const IdentityReport b = verify_log_identity(fam, LogIdentity::ExponentialForm, depth);
        r.add("exponential form, " + spec, b.passed, "depth " + std::to_string(depth)).diffs = b.diffs;
    }
    return r;
}

Report stirling_suite(const SuiteOptions& o) {
    Report r;
    const int order = order_at_least(o, 24);
    const int cmp = 14;
    const BinomialFamily& exp1 = family("exp1", order);
    const StirlingExpansion ex = stirling_terms(exp1, 3);
    std::vector<Rational> half_log(cmp + 1), bracket(cmp + 1);
    for (int n = 1; n <= cmp; ++n) half_log[static_cast<std::size_t>(n)] = Rational(1, 2 * n);
    for (int n = 2; n <= cmp; ++n) bracket[static_cast<std::size_t>(n)] = Rational(-1, 12);
    r.add("g_2 = -(1/2) ln(1 - a), exp1", agree(ex.term(2), QSeries(half_log, cmp, "a"), cmp),
          ex.term(2).to_string(4));
    r.add("1/(24s) bracket = -a^2/(12(1 - a)), exp1", agree(ex.term(3), QSeries(bracket, cmp, "a"), cmp),
          ex.term(3).to_string(4));

    for (const std::string spec : {"exp1", "geom", "nu"}) {
        const BinomialFamily& fam = family(spec, order);
        const StirlingExpansion e = stirling_terms(fam, 3);
        r.add("1/(24s) closed form, " + spec, agree(e.term(3), closed_form_g3(fam), cmp));
        r.add("1/(48s^2) closed form, " + spec, agree(e.term(4), closed_form_g4(fam), cmp));
    }
    const StirlingExpansion id = stirling_terms(family("id", order), 3);
    bool vanish = true;
    for (int k = 1; k <= 4; ++k) vanish = vanish && id.term(k).truncated(cmp).valuation() > cmp;
    r.add("f = x: all corrections vanish", vanish);

    const StirlingNumericReport num = stirling_numeric(family("exp1", order_at_least(o, 90)), Rational(1, 2), 20, 40);
    const bool in_band = num.ratio >= HighPrec("3.2") && num.ratio <= HighPrec("4.8");
    Check& c = r.add("error ratio n = 20 -> 40 in [3.2, 4.8], exp1, a = 1/2", in_band, "ratio " + decimal(num.ratio, 8));
    c.values = {{"error_20", decimal(num.error1, 20)}, {"error_40", decimal(num.error2, 20)}, {"ratio", decimal(num.ratio, 20)}};

    const StirlingNumericReport g = stirling_numeric(family("geom", order_at_least(o, 90)), Rational(1, 16), 20, 40);
    r.note("error ratio n = 20 -> 40, geom, a = 1/16", "ratio " + decimal(g.ratio, 8)).values = {
        {"error_20", decimal(g.error1, 20)}, {"error_40", decimal(g.error2, 20)}, {"ratio", decimal(g.ratio, 20)}};
    return r;
}

Report nu_suite(const SuiteOptions& o) {
    Report r;
    const int n = o.depth.value_or(6);
    const NuExampleReport rep = nu_example_check(n);
    r.add("s^1 series = -sum a^n/n (n+1)^(n-1)/n!", rep.s1_matches, rep.s1_series.to_string(4));
    r.add("s^0 series = (1/2) sum a^n/n sum_k n^k/k!", rep.s0_matches, rep.s0_series.to_string(4));
    return r;
}

Report propositions_suite(const SuiteOptions& o) {
    Report r;
    bool p11 = true;
    std::string where;
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 6; ++m)
            for (const ParamPoly& c : {ParamPoly(1), ParamPoly(1) + kS, kS * kS - ParamPoly(Rational(2))}) {
                const IdentitySides sides = shift_derivative_identity(PSeries::monomial(c, m), n);
                if (!sides.holds() && p11) {
                    p11 = false;
                    where = "n = " + std::to_string(n) + ", m = " + std::to_string(m);
                }
            }
    r.add("shift/derivative identity, n <= 4, m <= 6, symbolic p", p11, where);

    const int order = order_at_least(o, 16);
    for (const std::string spec : {"exp1", "geom", "nu"}) {
        const BinomialFamily& fam = family(spec, order);
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 2; ++n)
            for (int m = 0; m <= 6; ++m) {
                const QSeries g = QSeries::monomial(1, m, kExact, "s");
                try {
                    if (!agree(build_Tn(fam, n).apply(g), tn_integral(fam, n, g), order) && ok) {
                        ok = false;
                        detail = "n = " + std::to_string(n) + ", m = " + std::to_string(m);
                    }
                } catch (const DomainError& e) {
                    ok = false;
                    detail = e.what();
                }
            }
        r.add("integral form = T_n, n <= 2, s^m, m <= 6, " + spec, ok, detail);
    }
    return r;
}

Report ratio_suite(const SuiteOptions& o) {
    Report r;
    const int depth = o.depth.value_or(5);
    const int order = order_at_least(o, 16);
    for (const std::string spec : {"id", "exp1", "geom", "nu"}) {
        const BinomialFamily& fam = family(spec, order);
        const AsymptoticSeries nested = ratio_graded(fam, depth, RatioRoute::Nested);
        const AsymptoticSeries first = ratio_graded(fam, depth, RatioRoute::FirstOrder);
        bool ok = true;
        std::string detail;
        for (int s = 0; s <= 3; ++s)
            for (int h = 0; h <= 3; ++h) {
                const AsymptoticSeries direct = ratio_P_direct(fam, s, h, depth);
                for (const AsymptoticSeries* g : {&nested, &first}) {
                    const AsymptoticSeries at =
                        g->specialize(Sym::s, Rational(s)).specialize(Sym::H, Rational(h));
                    if (first_difference(at, direct, depth) >= 0 && ok) {
                        ok = false;
                        detail = "s = " + std::to_string(s) + ", H = " + std::to_string(h);
                    }
                }
            }
        r.add("graded resolvent = polynomial division, (s, H) in {0..3}^2, " + spec, ok, detail);
        const std::vector<ParamPoly> p = ratio_P_symbolic(fam, 6);
        bool deg = true;
        for (int n = 0; n <= 6; ++n) deg = deg && p[static_cast<std::size_t>(n)].degree(Sym::s) <= n;
        r.add("deg_s P_n^H <= n, n <= 6, " + spec, deg);
    }
    return r;
}

Report invariance_suite(const SuiteOptions& o) {
    Report r;
    const int order = order_at_least(o, 24);
    const QSeries f = family_series(parse_family_spec("exp1"), order);
    const InvarianceReport inv = invariance_check(f, Rational(1, 3), order, 4);
    r.add("omega~(x) = omega(x/(1 + Ax)), order >= 12", inv.omega_matches && order >= 12);
    r.add("compared to a-order >= 10", inv.order >= 10, "order " + std::to_string(inv.order));
    const char* names[] = {"", "s^1 term", "s^0 term", "s^-1 term", "s^-2 term"};
    for (const auto& t : inv.terms) {
        const std::string label = std::string(names[t.k]) + " (g_" + std::to_string(t.k) + ")";
        if (t.k <= 2)
            r.add(label + " not invariant, defect " + (t.k == 1 ? "+" : "-") + "ln(1 + Aa)",
                  !t.invariant && t.defect_matches);
        else
            r.add(label + " invariant", t.invariant);
    }
    return r;
}

Column random_column(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Column c;
    for (int k = 0; k <= n; ++k) c.push_back(ParamPoly(make_rational(num(rng), den(rng))) + kS * make_rational(num(rng), 3));
    return c;
}

Report appendix_suite(const SuiteOptions& o) {
    Report r;
    std::mt19937 rng(o.seed);
    const int order = order_at_least(o, 20);
    for (const std::string spec : {"exp1", "geom", "nu"}) {
        const BinomialFamily& fam = family(spec, order);
        bool step = true;
        for (int trial = 0; trial < 3; ++trial) {
            const Column g = random_column(rng, 9);
            step = step && conjugated_step_series(fam, g) == conjugated_step_law(fam, g);
        }
        Column unit(10, ParamPoly());
        unit[1] = ParamPoly(1);
        step = step && conjugated_step_series(fam, unit) == conjugated_step_law(fam, unit);
        r.add("conjugated operator: series route = coefficient law, n <= 8, " + spec, step);
        const Column g0 = random_column(rng, 9);
        r.add("binomial recurrence, n, k <= 4, " + spec, prop_A2_check(fam, g0, 4, 4));
        r.add("l_s: table = quotient = (a/p_s) g(D) a^(s-1), " + spec, ell_s(fam, g0, 6).agree);
    }
    const int dx = o.depth.value_or(6), da = o.depth.value_or(6);
    const BinomialFamily& exp1 = family("exp1", order_at_least(o, dx + da + 4));
    const QSeries g_one = QSeries::constant(1, kExact);
    const QSeries g_poly(std::vector<Rational>{1, 2, Rational(1, 3), 0, 5}, kExact);
    for (const Rational& s : {Rational(1, 2), Rational(3, 2), Rational(-1, 2)}) {
        for (const QSeries* g : {&g_one, &g_poly}) {
            const ClosedFormReport c = resolvent_closed_form(exp1, *g, s, dx, da);
            r.add("closed-form resolvent, s = " + to_string(s) + ", g = " + g->to_string(5), c.passed,
                  std::to_string(c.mismatches) + " mismatches, positive powers " +
                      (c.positive_powers_cancel ? "cancel" : "remain"));
        }
    }
    const int depth = o.depth.value_or(5);
    for (const std::string& spec : {std::string("exp1"), random_spec(o.seed)}) {
        const BinomialFamily& fam = family(spec, order_at_least(o, depth + 8));
        const std::pair<const char*, AlphaDOperator> ops[] = {
            {"1", op_one()}, {"D", op_d()}, {"a D^2", op_alpha_d2()}};
        for (const auto& [name, t] : ops)
            for (int s : {2, 3}) {
                const ConjugationReport c = conjugated_expectation(fam, t, s, depth);
                r.add(std::string("(a/p_s) T (p_s/a), T = ") + name + ", s = " + std::to_string(s) + ", " + spec,
                      c.zero_form && c.shifted_form);
            }
    }
    return r;
}

Json samples_json(const LimitReport& l) {
    Json out = Json::array();
    for (const auto& s : l.samples) out.push_back({{"n", s.n}, {"value", decimal(s.value, 20)}, {"error", decimal(s.error, 6)}});
    return out;
}

Report limits_suite(const SuiteOptions& o) {
    Report r;
    const int order = order_at_least(o, 90);
    const BinomialFamily& exp1 = family("exp1", order);
    const LimitReport concl = limit_check(exp1, LimitKind::Conclusion, 2, 8, 64, 1);
    const HighPrec last = concl.samples.back().error;
    Check& c = r.add("|p_n'(2n)/p_n(2n) - omega(1/2)| decreasing, n = 8..64, final < 0.02",
                     concl.monotone && last < HighPrec("0.02"), "final error " + decimal(last, 6));
    c.values = {{"target", decimal(concl.target, 20)}, {"samples", samples_json(concl)}};

    const LimitReport first = limit_check(exp1, LimitKind::First, 2, 8, 64, 8);
    const HighPrec rel = abs(first.samples.back().value / first.target - 1);
    r.add("p_{n+1}(2n)/(n p_n(2n)) within 1% of a/f'(omega(1/a)) at n = 64", rel < HighPrec("0.01"),
          "relative deviation " + decimal(rel, 6))
        .values = {{"target", decimal(first.target, 20)}, {"samples", samples_json(first)}};

    for (const std::string spec : {"exp1", "geom", "nu"}) {
        const TwoOrdersReport t = ratio_two_orders(family(spec, order_at_least(o, 16)), 12);
        r.add("ratio expansion orders 0 and 1 in closed form, " + spec, t.order0 && t.order1 && t.q1_closed_form);
    }

    const LimitReport second = limit_check(exp1, LimitKind::Second, 2, 8, 64, 8);
    r.note("ln p_n(2n) - n ln(2n) + 2n I(1/2) -> (1/2) ln omega'(1/2)",
           std::string(second.monotone ? "decreasing" : "not monotone") + ", final error " +
               decimal(second.samples.back().error, 6))
        .values = {{"target", decimal(second.target, 20)}, {"samples", samples_json(second)}};
    const LimitReport ratio2 = second_ratio_limit(exp1, 2, 8, 64, 8);
    r.note("p_{n+1}(2n)/p_n(2n) - 2n/f'(omega(1/2)) -> second-order limit",
           std::string(ratio2.monotone ? "decreasing" : "not monotone") + ", final error " +
               decimal(ratio2.samples.back().error, 6))
        .values = {{"target", decimal(ratio2.target, 20)}, {"samples", samples_json(ratio2)}};
    return r;
}

Report sheffer_suite(const SuiteOptions& o) {
    Report r;
    const int order = order_at_least(o, 20);
    const QSeries x = QSeries::identity(order);
    const QSeries one = QSeries::constant(1, kExact);
    const QSeries bern = inverse((exp(x) - one).shifted_down(1));
    struct Pair {
        std::string name;
        std::string spec;
        QSeries ell;
    };
    const std::vector<Pair> pairs{{"exp1, l = x/(e^x - 1)", "exp1", bern},
                                  {"geom, l = 1/(1 - x)", "geom", inverse(one - x, order)},
                                  {"nu, l = e^(2x)", "nu", exp(x.scaled(Rational(2)))}};
    for (const auto& p : pairs) {
        const ShefferFamily sf = tau_seq(family(p.spec, order), p.ell, 12);
        r.add("generating function to order 12, " + p.name, generating_function_check(sf, 12));
        r.add("symbolic tau specializes, n <= 8, " + p.name, symbolic_specializes(sf, 8));
        r.add("theta tau_n = n tau_n, n <= 8, " + p.name, theta_check(sf, 8));
        bool res = true;
        std::string detail;
        const std::pair<const char*, AlphaDOperator> ops[] = {{"1", op_one()}, {"D", op_d()}, {"a", op_alpha()}};
        for (const auto& [name, t] : ops)
            for (int s = 1; s <= 3; ++s) {
                const ResolventReport rr = sheffer_resolvent_check(sf, t, s, o.depth.value_or(5));
                if (!rr.passed && res) {
                    res = false;
                    detail = std::string("T = ") + name + ", s = " + std::to_string(s);
                }
            }
        r.add("Sheffer resolvent, T in {1, D, a}, s <= 3, " + p.name, res, detail);
    }
    const ShefferFamily bt = tau_seq(family("exp1", order), bern, 12);
    r.add("tau_1 = a - 1/2, tau_2 = a^2 - 2a + 2/3",
          bt.tau_polys[1] == QSeries(std::vector<Rational>{Rational(-1, 2), 1}, kExact, "a") &&
              bt.tau_polys[2] == QSeries(std::vector<Rational>{Rational(2, 3), -2, 1}, kExact, "a"));

    bool erase = true;
    for (int n = 0; n <= 4; ++n) erase = erase && nu_power(n, true).without_lambda() == nu_power(n);
    r.add("nu-bar with lambda erased = nu, n <= 4", erase);
    const BinomialFamily& e1 = family("exp1", order);
    bool ell_one = true;
    for (int n = 0; n <= 3; ++n) ell_one = ell_one && same_operator(build_Tn_ell(e1, one, n), build_Tn(e1, n, TnRoute::Nu, "a"), order);
    r.add("T_n^l with l = 1 equals T_n, n <= 3", ell_one);

    const int bdepth = o.depth.value_or(6);
    const BernoulliReport b = bernoulli_log_experiment(bdepth);
    bool complete = static_cast<int>(b.rhs.size()) == bdepth + 1;
    for (const auto& c : b.candidates) complete = complete && static_cast<int>(c.lhs.size()) == bdepth + 1;
    r.add("Bernoulli logarithm report complete for both readings, depth " + std::to_string(bdepth), complete, b.note);
    Json rhs = Json::array();
    for (const auto& p : b.rhs) rhs.push_back(param_poly_json(p));
    r.checks.back().values = {{"operator_side", rhs}};
    for (const auto& c : b.candidates) {
        Check& k = r.note("Bernoulli reading: " + c.name, std::to_string(c.matching) + " of " +
                                                               std::to_string(bdepth + 1) + " coefficients match");
        k.diffs = c.diffs;
        Json lhs = Json::array();
        for (const auto& p : c.lhs) lhs.push_back(param_poly_json(p));
        k.values = {{"log_side", lhs}, {"differing_indices", diffs_json(c.diffs)}};
    }

    const ShefferFamily big = tau_seq(family("exp1", order_at_least(o, 60)), inverse((exp(QSeries::identity(order_at_least(o, 60))) - one).shifted_down(1)), 32);
    const TnEllTrend tr = tn_ell_trend(big, Rational(1, 4), {16, 32});
    r.add("s (tau_s'/tau_s - omega) -> -a T_1^l omega, s = 16, 32, a = 1/4", tr.decreasing,
          "errors " + decimal(tr.samples[0].error, 4) + ", " + decimal(tr.samples[1].error, 4));
    return r;
}

} // namespace

QSeries random_polynomial_family(std::uint32_t seed, int degree) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    std::vector<Rational> c{Rational(0), Rational(1)};
    for (int k = 2; k <= degree; ++k) c.push_back(make_rational(num(rng), den(rng)));
    if (c.back() == 0) c.back() = 1;
    return QSeries(c, kExact);
}

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> all{
        {"tn", "T-operators from the nu-transform and the matrix scheme", tn_suite},
        {"log-identity", "(1/s) ln(a^-s p_s) against the operator logarithm", master_suite},
        {"stirling", "generalized Stirling expansion, classical case", stirling_suite},
        {"nu-example", "expansion for the inverse of x e^-x", nu_suite},
        {"propositions", "shift/derivative identity and the integral form of T_n", propositions_suite},
        {"ratio", "p_(s+H)/p_s by graded resolvent and by division", ratio_suite},
        {"invariance", "f -> f e^(-Ax)", invariance_suite},
        {"appendix", "conjugated operator, l_s, closed-form resolvent, conjugation formula", appendix_suite},
        {"limits", "limit formulas", limits_suite},
        {"sheffer", "Sheffer sequences", sheffer_suite},
    };
    return all;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
    for (const auto& s : suites()) {
        if (s.name != name) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Report r = s.run(opts);
        r.suite = s.name;
        r.title = s.title;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace ulog
