#ifndef ULOG_APPENDIX_HPP
#define ULOG_APPENDIX_HPP

// The conjugated operator (y/f(y))^s (sL - d/dy) (f(y)/y)^s in the variable
// y = ω(x), its coefficient law, the series ℓ_s(α), the closed form of the
// resolvent and the conjugation formula (α/p_s) T (p_s/α).

#include "ulog/asymptotic.hpp"
#include "ulog/family.hpp"
#include "ulog/graded.hpp"

#include <vector>

namespace ulog {

/// Column g_0..g_N of G(y) = Σ g_n y^n/n!.
using Column = std::vector<ParamPoly>;

/// One application of the conjugated operator, on the series
/// (with L h = (h - h(0))/τ_f(y)). Returns N columns entries (one fewer).
Column conjugated_step_series(const BinomialFamily& fam, const Column& g);

/// The same through (s-n-1)/(n+1) (g_{n+1} - g_0 q_{n+1}(s)).
Column conjugated_step_law(const BinomialFamily& fam, const Column& g);

/// g_table[k] = column after k applications (series route). Throws
/// MismatchError if the two routes ever disagree.
struct ConjugatedState {
    std::vector<Column> g_table;
};
ConjugatedState conjugated_table(const BinomialFamily& fam, const Column& g0, int k_max);

/// binom(s-1,n)(g_n^k - g_0^k q_n) + Σ_{m<=k} binom(s-1,n+m) q_{n+m} g_0^{k-m}
///   = binom(s-1,n+k) g_{n+k}^0 for n <= n_max, k <= k_max.
bool prop_A2_check(const BinomialFamily& fam, const Column& g0, int n_max, int k_max);

struct EllReport {
    /// Σ g_0^k α^{-k} read off the table.
    AsymptoticSeries from_table;
    /// Σ binom(s-1,k) g_k α^{-k} / Σ binom(s-1,k) q_k α^{-k}.
    AsymptoticSeries from_quotient;
    /// (α/p_s) g(D) α^{s-1} with the symbolic p_s.
    AsymptoticSeries from_p_symbolic;
    bool agree = false;
};

EllReport ell_s(const BinomialFamily& fam, const Column& g0, int depth);

struct ClosedFormReport {
    bool passed = false;
    /// Positive powers of α in the closed form cancel.
    bool positive_powers_cancel = false;
    int mismatches = 0;
    Rational s;
};

/// Σ_k α^{-k}(sL - d/dω)^k g(ω(x)) by graded inversion against
/// ℓ_s(α) + α (f(y)/y)^s y Σ_k c_k y^k/k! ∫_0^1 t^{k-s} e^{-αy(1-t)} dt,
/// c_k the coefficients of (y/f)^s g minus ℓ_s q_k, the t-integrals taken
/// termwise, compared to x-order depth_x and α^{-depth_a}.
/// Throws DomainError if k+1-s vanishes for some k in range.
ClosedFormReport resolvent_closed_form(const BinomialFamily& fam, const QSeries& g, const Rational& s, int depth_x,
                                       int depth_a);

struct ConjugationReport {
    bool zero_form = false;
    bool shifted_form = false;
    AsymptoticSeries lhs;
    AsymptoticSeries rhs_zero;
    AsymptoticSeries rhs_shifted;
};

/// (α/p_s) T (p_s/α) at integer s >= 1 against both graded forms.
ConjugationReport conjugated_expectation(const BinomialFamily& fam, const AlphaDOperator& t, int s, int depth);

} // namespace ulog

#endif
