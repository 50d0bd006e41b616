#ifndef ULOG_STIRLING_HPP
#define ULOG_STIRLING_HPP

// The expansion of ln p_s(s/α) in powers of 1/s, the two operator forms of
// (1/s) ln p_s, the f -> f e^{-Ax} invariance and the limit statements.

#include "ulog/asymptotic.hpp"
#include "ulog/family.hpp"
#include "ulog/numeric.hpp"

#include <string>
#include <vector>

namespace ulog {

/// (T_n ω)(α) for n = 0..n_max as series in "a"; the n-th term of
/// -(s/α²)(p_s'/p_s)(s/α) is (-s)^{1-n} α^{n-2} (T_n ω)(α).
std::vector<QSeries> log_deriv_expansion(const BinomialFamily& fam, int n_max);

/// ln p_s(s/α) ~ s ln(s/α) + Σ_{k>=1} s^{2-k} g_k(α).
/// g_1 = -α^{-1} ∫_0^α ln f'(ω(t)) dt, g_2 = ½ ln ω'(α), ...
/// Every g_k has zero constant term.
struct StirlingExpansion {
    /// ∫_0^α ln f'(ω(t)) dt.
    QSeries integral_term;
    /// g[k] for k = 1..; g[0] is unused (kept zero).
    std::vector<QSeries> g;

    const QSeries& term(int k) const { return g.at(static_cast<std::size_t>(k)); }
    int max_k() const { return static_cast<int>(g.size()) - 1; }
};

/// Terms g_1..g_{n_max+1}. Throws MismatchError if the two computations of
/// the integral term disagree and DomainError on an unexpected α^{-1}
/// resonance.
StirlingExpansion stirling_terms(const BinomialFamily& fam, int n_max);

/// The correction multiplying 1/(24s) written out through ω', ω'', ω'''
/// and the one multiplying -1/(48s²) through (α/ω')^{(4)}, for comparison
/// with g_3 and g_4.
QSeries closed_form_g3(const BinomialFamily& fam);
QSeries closed_form_g4(const BinomialFamily& fam);

struct CoefficientDiff {
    int index = 0;
    ParamPoly lhs;
    ParamPoly rhs;

    friend bool operator==(const CoefficientDiff&, const CoefficientDiff&) = default;
};

struct IdentityReport {
    bool passed = false;
    std::vector<ParamPoly> lhs;
    std::vector<ParamPoly> rhs;
    std::vector<CoefficientDiff> diffs;
};

enum class LogIdentity { OperatorLog, ExponentialForm };

/// (1/s) ln(α^{-s} p_s(α)) from the symbolic p_s against
/// log(1 - sα^{-1}L + α^{-1}d/dω) ω(x)/x |_{x=0} (OperatorLog), or
/// (1/s) ln p_s(α) against exp(∂_α(d/dx - s(xf'/f)L)) (xf'/f)|_{x=0} ln α
/// (ExponentialForm), coefficients of α^0..α^{-depth}.
IdentityReport verify_log_identity(const BinomialFamily& fam, LogIdentity which, int depth);

struct InvarianceTerm {
    int k = 0;
    bool invariant = false;
    /// g̃_k(α) - g_k(α/(1+Aα)) equals the expected defect (0, ln(1+Aα) for
    /// k = 1, -ln(1+Aα) for k = 2).
    bool defect_matches = false;
};

struct InvarianceReport {
    bool omega_matches = false;
    std::vector<InvarianceTerm> terms;
    int order = 0;
};

/// Compares the expansions of f and f e^{-Ax}. Uses the terms g_1..g_{k_max}.
InvarianceReport invariance_check(const QSeries& f, const Rational& a, int order, int k_max = 4);

enum class LimitKind { First, Second, Conclusion };

struct LimitSample {
    int n = 0;
    HighPrec value;
    HighPrec error;
};

struct LimitReport {
    std::string quantity;
    std::string target_text;
    HighPrec target;
    std::vector<LimitSample> samples;
    /// error(n_i)/error(n_{i+1}).
    std::vector<HighPrec> ratios;
    bool monotone = false;
};

/// Samples at n = n_min, n_min+step, ..., n_max (exact rationals, converted
/// only for the summary). Conclusion: p_n'(nα)/p_n(nα) -> ω(1/α).
/// First: p_{n+1}(nα)/(n p_n(nα)) -> α/f'(ω(1/α)).
/// Second: ln p_n(nα) - n ln(nα) + nα ∫_0^{1/α} ln f'(ω) -> ½ ln ω'(1/α).
/// Throws DomainError when 1/α is outside the safe range of the series.
LimitReport limit_check(const BinomialFamily& fam, LimitKind which, const Rational& alpha, int n_min, int n_max,
                        int step);

/// p_{n+1}(nα)/p_n(nα) - nα f'(ω(1/α))^{-1}
///   -> (α/2) f'(ω(1/α))^{-1} (1 - ω'(1/α) + α^{-1} ω''(1/α)/ω'(1/α)).
LimitReport second_ratio_limit(const BinomialFamily& fam, const Rational& alpha, int n_min, int n_max, int step);

struct TwoOrdersReport {
    bool order0 = false;
    bool order1 = false;
    bool q1_closed_form = false;
    PSeries machine_order1;
    PSeries closed_order1;
};

/// The α^H and α^{H-1} coefficients of p_{αs+H}/p_{αs}: assembled from
/// T_1 and q_1^{ω(s)}(1+H), against their closed forms in ω', ω''.
TwoOrdersReport ratio_two_orders(const BinomialFamily& fam, int order);

struct NuExampleReport {
    bool s1_matches = false;
    bool s0_matches = false;
    QSeries s1_series;
    QSeries s0_series;
    QSeries s1_expected;
    QSeries s0_expected;
};

/// The expansion for f = 𝔗^{-1}(x e^{-x}) against the two closed sums, to α^n.
NuExampleReport nu_example_check(int n);

struct StirlingNumericReport {
    int n1 = 0;
    int n2 = 0;
    HighPrec error1;
    HighPrec error2;
    HighPrec ratio;
};

/// |ln p_n(n/α) - (n ln(n/α) + n g_1 + g_2 + g_3/n)| at n1 and n2 for the
/// family given, all series evaluated at α.
StirlingNumericReport stirling_numeric(const BinomialFamily& fam, const Rational& alpha, int n1, int n2);

} // namespace ulog

#endif
