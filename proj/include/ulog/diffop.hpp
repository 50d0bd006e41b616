#ifndef ULOG_DIFFOP_HPP
#define ULOG_DIFFOP_HPP

// Differential operators Σ_j c_j(v) (d/dv)^j in normal order, and their
// construction from the words produced by ncpoly.

#include "ulog/family.hpp"
#include "ulog/ncpoly.hpp"
#include "ulog/series.hpp"

#include <string>
#include <vector>

namespace ulog {

struct DiffOperator {
    /// coeffs[j] multiplies the j-th derivative.
    std::vector<QSeries> coeffs;
    std::string var = "s";

    static DiffOperator identity(std::string var = "s");
    int max_derivative() const { return static_cast<int>(coeffs.size()) - 1; }

    QSeries apply(const QSeries& g) const;
    PSeries apply(const PSeries& g) const;
    std::string to_string(int max_terms = 6) const;
};

/// Series substituted for the letters: σ, λ (and 1/λ for λ^{-1}).
struct LetterValues {
    QSeries sigma;
    QSeries lambda;
};

/// σ = v/ω'(v), λ = ℓ(ω(v)) (λ = 1 when ell is empty).
LetterValues letter_values(const BinomialFamily& fam, const std::string& var, const QSeries* ell = nullptr);

/// Normal-orders a combination of E-free words: letters act right to left,
/// and D∘Σ c_j ∂^j = Σ (c_j' + c_{j-1}) ∂^j.
DiffOperator realize(const NCPoly& p, const LetterValues& values);

enum class TnRoute { Nu, Matrix };

/// T_n(v, ∂/∂v): α_0 of ν^n E with σ = v/ω'(v), D = ∂/∂v.
DiffOperator build_Tn(const BinomialFamily& fam, int n, TnRoute route = TnRoute::Nu, const std::string& var = "s");

/// T_n^ℓ: α_0 of ν̄^n E with additionally λ = ℓ(ω(v)).
DiffOperator build_Tn_ell(const BinomialFamily& fam, const QSeries& ell, int n, const std::string& var = "a");

} // namespace ulog

#endif
