#ifndef ULOG_FAMILY_HPP
#define ULOG_FAMILY_HPP

// Everything derived directly from a series f(x) = x + O(x^2): its inverse,
// the series f/f' and its inverse ω, the binomial-type polynomials p_n, the
// coefficients q_n^t(s) and the continuations p_s, p_H^t.

#include "ulog/asymptotic.hpp"
#include "ulog/series.hpp"

#include <vector>

namespace ulog {

struct BinomialFamily {
    QSeries f;
    QSeries fprime;
    /// f^{inv}.
    QSeries phi;
    /// f/f'.
    QSeries tau_f;
    /// (f/f')^{inv}.
    QSeries omega;
    int order = 0;
};

/// Builds all derived series of f to the given order and cross-checks the
/// two reversions by composition. Throws DomainError unless f = x + O(x^2).
BinomialFamily build_family(const QSeries& f, int order);

/// Solves f/f' = g for f = x + O(x^2): (ln(f/x))' = 1/g - 1/x, then
/// exponentiates. Requires g = x + O(x^2).
QSeries tau_inverse(const QSeries& g);

/// p_0..p_n with Σ p_k(α) f(x)^k / k! = exp(αx), as exact polynomials in "a".
struct PSequence {
    std::vector<QSeries> polys;
};

PSequence p_seq(const BinomialFamily& fam, int n);

/// q_n^t(s) for n <= n_x, each a series in t (order n_t) with coefficients in
/// Q[s]: Taylor coefficients (times n!) of (x f'(t) / (f(x+t) - f(t)))^s.
struct QTable {
    std::vector<PSeries> by_n;
    const PSeries& operator[](int n) const { return by_n.at(static_cast<std::size_t>(n)); }
};

QTable q_coeffs(const BinomialFamily& fam, int n_x, int n_t);

/// q_n(s) = n! [x^n] (x/f(x))^s for n <= n, computed directly.
std::vector<ParamPoly> q_at_zero(const BinomialFamily& fam, int n);

/// p_H^t(α) = Σ_n binom(H-1, n) α^{H-n} q_n^t(H): exponent H, grade n holds
/// the t-series coefficient of α^{H-n}.
struct GradedTSeries {
    ParamPoly exponent;
    std::vector<PSeries> grades;
};

GradedTSeries p_H_t(const BinomialFamily& fam, int n);

/// Specializes p_H^t at a concrete H and t = 0.
AsymptoticSeries p_H_t_at_zero(const GradedTSeries& pht, const Rational& H);

/// p_s(α) = α^s Σ_k binom(s-1, k) q_k(s) α^{-k}, to depth n.
AsymptoticSeries p_symbolic(const BinomialFamily& fam, int n);

/// p_{s+H}(α)/p_s(α) for integer s, H by division of the polynomials.
/// Coefficient n of the result is P_n^H(s).
AsymptoticSeries ratio_P_direct(const BinomialFamily& fam, int s, int H, int n);

/// P_n^H(s) for n <= depth as polynomials in s and H, through
/// Σ_k binom(H, n-k) (sL - d/dω)^k q_{n-k}^{ω(x)}(1+H) f'(ω(x))^{-H} |_{x=0}.
std::vector<ParamPoly> ratio_P_symbolic(const BinomialFamily& fam, int depth);

} // namespace ulog

#endif
