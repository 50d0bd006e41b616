#include "doctest.h"
#include "oracles.hpp"

#include "ulog/family.hpp"
#include "ulog/family_spec.hpp"
#include "ulog/suites.hpp"

using namespace ulog;

namespace {

oracle::Vec vec_of(const QSeries& u, int n) {
    oracle::Vec v;
    for (int k = 0; k <= n; ++k) v.push_back(u[k]);
    return v;
}

QSeries random_f(std::mt19937& rng, int deg) { return QSeries::exact(oracle::random_delta(rng, deg)); }

// Value of an exact polynomial in α.
Rational value_at(const QSeries& p, const Rational& a) {
    Rational r = 0;
    for (int k = p.degree(); k >= 0; --k) r = r * a + p[k];
    return r;
}

} // namespace

TEST_CASE("derived series of a family") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 8;
        const QSeries f = random_f(rng, 1 + static_cast<int>(rng() % 5));
        const BinomialFamily fam = build_family(f, n);
        const oracle::Vec fv = vec_of(f, n), phi = vec_of(fam.phi, n);
        const oracle::Vec tau = vec_of(fam.tau_f, n), om = vec_of(fam.omega, n);
        oracle::Vec x{0, 1};
        CHECK(oracle::compose(fv, phi, n) == oracle::compose(x, x, n));
        CHECK(oracle::compose(tau, om, n) == oracle::compose(x, x, n));
        // f/f' times f' is f (f' is known one order less).
        CHECK(oracle::mul(tau, vec_of(fam.fprime, n - 1), n - 1) == oracle::mul(fv, oracle::Vec{1}, n - 1));
        CHECK(tau_inverse(fam.tau_f)[n - 1] == f[n - 1]);
    }
    CHECK_THROWS_AS(build_family(QSeries::exact({0, 2}), 4), DomainError);
    CHECK_THROWS_AS(build_family(QSeries::exact({1, 1}), 4), DomainError);
}

TEST_CASE("classical case gives falling factorials") {
    const BinomialFamily fam = make_family(parse_family_spec("exp1"), 12);
    const PSequence seq = p_seq(fam, 10);
    for (int n = 0; n <= 10; ++n) CHECK(seq.polys[static_cast<std::size_t>(n)].coeffs() == oracle::falling_factorial(n));
}

TEST_CASE("f = x gives monomials") {
    const PSequence seq = p_seq(make_family(parse_family_spec("id"), 6), 6);
    for (int n = 0; n <= 6; ++n) CHECK(seq.polys[static_cast<std::size_t>(n)] == QSeries::monomial(1, n, kExact, "a"));
}

TEST_CASE("binomial-type convolution holds for random families") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 6; ++trial) {
        const BinomialFamily fam = build_family(random_f(rng, 4), 9);
        const PSequence seq = p_seq(fam, 8);
        const Rational a = oracle::small_rational(rng), b = oracle::small_rational(rng);
        for (int n = 0; n <= 8; ++n) {
            Rational rhs = 0;
            for (int k = 0; k <= n; ++k)
                rhs += binomial(Rational(n), k) * value_at(seq.polys[static_cast<std::size_t>(k)], a) *
                       value_at(seq.polys[static_cast<std::size_t>(n - k)], b);
            CHECK(value_at(seq.polys[static_cast<std::size_t>(n)], a + b) == rhs);
        }
    }
}

TEST_CASE("q_n(s) interpolates the integer powers of x/f") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 6;
        const BinomialFamily fam = build_family(random_f(rng, 5), n + 2);
        const std::vector<ParamPoly> q = q_at_zero(fam, n);
        const oracle::Vec x_over_f = oracle::reciprocal(vec_of(fam.f.shifted_down(1), n), n);
        // q_k has degree k in s, so n + 1 sample points pin it down.
        for (int m = -2; m <= n; ++m) {
            const oracle::Vec direct = m >= 0 ? oracle::pow(x_over_f, m, n)
                                              : oracle::pow(vec_of(fam.f.shifted_down(1), n), -m, n);
            for (int k = 0; k <= n; ++k)
                CHECK(q[static_cast<std::size_t>(k)].specialize(Sym::s, m) ==
                      ParamPoly(direct[static_cast<std::size_t>(k)] * oracle::factorial(k)));
        }
    }
}

TEST_CASE("q_2 in the classical case") {
    // (1 - x/2 + x²/12 - ...)^s: [x²] = s/12 + binom(s,2)/4 = (3s² - s)/24
    const std::vector<ParamPoly> q = q_at_zero(make_family(parse_family_spec("exp1"), 4), 2);
    const ParamPoly s = ParamPoly::symbol(Sym::s);
    CHECK(q[1] == s * make_rational(-1, 2));
    CHECK(q[2] == s * (s * Rational(3) - ParamPoly(1)) * make_rational(1, 12));
}

TEST_CASE("symbolic p_s specializes to p_n") {
    for (const char* spec : {"exp1", "geom", "nu"}) {
        const BinomialFamily fam = make_family(parse_family_spec(spec), 10);
        const PSequence seq = p_seq(fam, 6);
        const AsymptoticSeries ps = p_symbolic(fam, 6);
        for (int n = 0; n <= 6; ++n)
            CHECK(first_difference(ps.specialize(Sym::s, n), from_alpha_polynomial(seq.polys[static_cast<std::size_t>(n)], 6), 6) < 0);
    }
}

TEST_CASE("random polynomial families are reproducible") {
    CHECK(random_polynomial_family(5, 6) == random_polynomial_family(5, 6));
    const QSeries f = random_polynomial_family(5, 6);
    CHECK(f[0] == 0);
    CHECK(f[1] == 1);
}
