#ifndef ULOG_PROPOSITIONS_HPP
#define ULOG_PROPOSITIONS_HPP

// Two independent descriptions of the operators T_n: the shift/derivative
// identity for (1 - pL)^{-1}L and the iterated [0,1]^n integral form.

#include "ulog/family.hpp"
#include "ulog/series.hpp"

namespace ulog {

struct IdentitySides {
    ParamPoly lhs;
    ParamPoly rhs;
    bool holds() const { return lhs == rhs; }
};

/// Both sides of
///   e^{p d/dx} (d/dp)^n (1 - pL)^{-1} L f |_{x=0}
///     = (1/(n+1)) [ (d/dp)^{n+1} e^{p d/dx} - e^{p d/dx} (d/dp)^{n+1} ] f |_{x=0}
/// for a polynomial f in x whose coefficients may involve p (the symbol s).
IdentitySides shift_derivative_identity(const PSeries& f, int n);

/// T_n g(s) through
///   σ(s) ∫_{[0,1]^n} Π ∂²/∂ε_k² dt_k/t_k [Π_{k<n} σ(s+δ_k)] g(s+δ_n) |_{ε=0},
/// δ_k = ε_k t_k + ε_{k-1} t_{k-1} t_k + ... + ε_1 t_1⋯t_k, σ = s/ω'(s).
/// Expands to degree 2 in each ε_k and integrates t-monomials exactly.
/// Throws DomainError on a t^{-1} integrand.
QSeries tn_integral(const BinomialFamily& fam, int n, const QSeries& g);

} // namespace ulog

#endif
