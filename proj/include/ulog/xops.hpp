#ifndef ULOG_XOPS_HPP
#define ULOG_XOPS_HPP

// Elementary linear operators on C[[x]] used throughout the graded
// identities.

#include "ulog/series.hpp"

namespace ulog {

/// L g(x) = (g(x) - g(0)) / x, the 0-derivative.
template <class C>
Series<C> zero_derivative(const Series<C>& g) {
    if (g.order() < 0) throw TruncationError("0-derivative of a series with unknown constant term");
    return (g - Series<C>::constant(g[0], kExact, g.var())).shifted_down(1);
}

/// d/dω = (1/ω'(x)) d/dx, given 1/ω'(x).
template <class C>
Series<C> d_omega(const Series<C>& g, const Series<C>& inv_omega_prime) {
    return inv_omega_prime * derive(g);
}

/// The closed action of (1 - pL)^{-1} on a polynomial:
/// (x g(x) - p g(p)) / (x - p) = Σ_j g_j Σ_{i<=j} x^i p^{j-i}, p symbolic.
PSeries resolvent_rational_action(const PSeries& g, const ParamPoly& p);

} // namespace ulog

#endif
