#ifndef ULOG_TEST_ORACLES_HPP
#define ULOG_TEST_ORACLES_HPP

// Naive reference computations on plain coefficient vectors. Nothing here
// calls into the library beyond the Rational type.

#include "ulog/rational.hpp"

#include <random>
#include <vector>

namespace oracle {

using ulog::Rational;
using Vec = std::vector<Rational>;

inline Rational at(const Vec& v, int k) { return k >= 0 && k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : Rational(0); }

// Product truncated to degree n.
inline Vec mul(const Vec& a, const Vec& b, int n) {
    Vec r(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r[static_cast<std::size_t>(i + j)] += at(a, i) * at(b, j);
    return r;
}

inline Vec pow(const Vec& a, int m, int n) {
    Vec r(static_cast<std::size_t>(n) + 1, Rational(0));
    r[0] = 1;
    for (int i = 0; i < m; ++i) r = mul(r, a, n);
    return r;
}

// outer(inner) by Horner; inner has zero constant term.
inline Vec compose(const Vec& outer, const Vec& inner, int n) {
    Vec r(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = static_cast<int>(outer.size()) - 1; k >= 0; --k) {
        r = mul(r, inner, n);
        r[0] += at(outer, k);
    }
    return r;
}

// 1/a by the recurrence b_n = -(1/a_0) Σ_{k>=1} a_k b_{n-k}.
inline Vec reciprocal(const Vec& a, int n) {
    Vec b(static_cast<std::size_t>(n) + 1, Rational(0));
    b[0] = 1 / a[0];
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k <= m; ++k) acc += at(a, k) * b[static_cast<std::size_t>(m - k)];
        b[static_cast<std::size_t>(m)] = -acc / a[0];
    }
    return b;
}

// Coefficients of a(a-1)...(a-n+1) from the signed Stirling recurrence.
inline Vec falling_factorial(int n) {
    Vec c{Rational(1)};
    for (int k = 0; k < n; ++k) {
        Vec next(c.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= Rational(k) * c[i];
        }
        c = next;
    }
    return c;
}

// Small rational in [-range, range] with denominator up to den.
inline Rational small_rational(std::mt19937& rng, int range = 3, int den = 4) {
    std::uniform_int_distribution<int> num(-range * den, range * den);
    std::uniform_int_distribution<int> d(1, den);
    return ulog::make_rational(num(rng), d(rng));
}

// x + c_2 x^2 + ... + c_deg x^deg with random small rationals.
inline Vec random_delta(std::mt19937& rng, int deg) {
    Vec v(static_cast<std::size_t>(deg) + 1, Rational(0));
    v[1] = 1;
    for (int k = 2; k <= deg; ++k) v[static_cast<std::size_t>(k)] = small_rational(rng, 2, 3);
    return v;
}

inline Vec random_vec(std::mt19937& rng, int deg) {
    Vec v(static_cast<std::size_t>(deg) + 1);
    for (auto& c : v) c = small_rational(rng);
    return v;
}

inline Rational factorial(int n) {
    Rational r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace oracle

#endif
