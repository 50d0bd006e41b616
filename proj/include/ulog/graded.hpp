#ifndef ULOG_GRADED_HPP
#define ULOG_GRADED_HPP

// Operators on C[[x]] graded by powers of α^{-1}, and the geometric-series
// and logarithm inversions they admit when every part raises the grade.

#include "ulog/asymptotic.hpp"
#include "ulog/family.hpp"

#include <string>
#include <vector>

namespace ulog {

/// α^exponent · Σ_k α^{-k} G_k(x): grades[k] is a series in x.
struct GradedSeries {
    ParamPoly exponent;
    std::vector<PSeries> grades;

    int depth() const { return static_cast<int>(grades.size()) - 1; }
};

enum class OpKind { Mul, Dx, DOmega, L };

struct ElementaryOp {
    OpKind kind;
    /// The multiplier for Mul; 1/ω'(x) for DOmega.
    PSeries factor;

    static ElementaryOp mul(const PSeries& m) { return {OpKind::Mul, m}; }
    static ElementaryOp dx() { return {OpKind::Dx, PSeries()}; }
    static ElementaryOp d_omega(const PSeries& inv_omega_prime) { return {OpKind::DOmega, inv_omega_prime}; }
    static ElementaryOp zero_derivative() { return {OpKind::L, PSeries()}; }
};

/// coeff · α^{-grade} · ops[0] ∘ ops[1] ∘ ... (ops[back] acts first).
struct GradedPart {
    int grade = 1;
    ParamPoly coeff = ParamPoly(1);
    std::vector<ElementaryOp> ops;
};

struct GradedOperator {
    std::vector<GradedPart> parts;

    /// Throws DomainError if some part does not raise the grade.
    void require_positive() const;
    /// X·G, keeping grades <= depth.
    GradedSeries apply(const GradedSeries& g, int depth) const;
};

PSeries apply_ops(const std::vector<ElementaryOp>& ops, const PSeries& g);

/// G, XG, X²G, ... up to the first power whose grades all exceed depth.
std::vector<GradedSeries> operator_powers(const GradedOperator& x, const GradedSeries& target, int depth);

/// (1 - X)^{-1} G.
GradedSeries graded_resolvent(const GradedOperator& x, const GradedSeries& target, int depth);

/// log(1 - X) G = -Σ_{k>=1} X^k G / k.
GradedSeries graded_log(const GradedOperator& x, const GradedSeries& target, int depth);

/// Value at x = 0, grade k becoming the α^{exponent-k} coefficient.
AsymptoticSeries eval_at_zero(const GradedSeries& g, int depth);

/// Value at x = p α^{-1}: the x^j coefficient of grade k moves to grade k+j
/// with factor p^j.
AsymptoticSeries eval_at_shift(const GradedSeries& g, const ParamPoly& p, int depth);

/// An operator T(α, D) = Σ α^a t_a(D), with D = d/dα.
struct AlphaDTerm {
    int alpha_power = 0;
    QSeries d_series;
};
using AlphaDOperator = std::vector<AlphaDTerm>;

/// T(α, ω(x)) = e^{-αω(x)} T e^{αω(x)} as a graded series (times an extra
/// factor series m(x), which is 1 by default).
GradedSeries operator_symbol(const BinomialFamily& fam, const AlphaDOperator& t, int depth,
                             const PSeries* extra = nullptr);

/// X = s α^{-1} L - α^{-1} d/dω (1 - sα^{-1}L + α^{-1}d/dω = 1 - X).
GradedOperator x_first_order(const BinomialFamily& fam);

/// X = (s/α)(1 + α^{-1}d/dω)^{-1} L = Σ_j s(-1)^j α^{-1-j} (d/dω)^j L.
GradedOperator x_nested(const BinomialFamily& fam, int depth);

/// X = -α^{-1} d/dω (1 - sα^{-1}L)^{-1} = -Σ_j s^j α^{-1-j} d/dω L^j.
GradedOperator x_shifted(const BinomialFamily& fam, int depth);

/// X = sα^{-1} ℓ(ω) L ℓ(ω)^{-1} - α^{-1} d/dω.
GradedOperator x_sheffer(const BinomialFamily& fam, const QSeries& ell);

/// p_H^{ω(x)}(α) f'(ω(x))^{-H} (shift_h = false) or
/// p_{H+1}^{ω(x)}(α)/α f'(ω(x))^{-H} (shift_h = true), H symbolic.
GradedSeries ratio_target(const BinomialFamily& fam, int depth, bool shift_h);

enum class RatioRoute { Nested, FirstOrder };

/// p_{s+H}(α)/p_s(α) with s and H symbolic, through the graded resolvent.
AsymptoticSeries ratio_graded(const BinomialFamily& fam, int depth, RatioRoute route);

/// (α/p_s) T (p_s/α) with symbolic s: x = 0 form, or the form with
/// (1 + α^{-1}d/dω(1 - sα^{-1}L)^{-1})^{-1} evaluated at x = sα^{-1}.
AsymptoticSeries conjugated_graded(const BinomialFamily& fam, const AlphaDOperator& t, int depth, bool shifted_form);

/// Laurent polynomial poly(α) · α^{-shift}.
struct LaurentPoly {
    QSeries poly;
    int shift = 0;

    AsymptoticSeries expand(int depth) const;
};

/// T applied to a Laurent polynomial with shift 0 (a polynomial).
LaurentPoly apply_alpha_d(const AlphaDOperator& t, const QSeries& poly);

/// Human-readable form of an operator description.
std::string describe(const AlphaDOperator& t);

} // namespace ulog

#endif
