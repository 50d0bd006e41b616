#include "doctest.h"
#include "oracles.hpp"

#include "ulog/family_spec.hpp"
#include "ulog/sheffer.hpp"

using namespace ulog;

namespace {

Rational value_at(const QSeries& p, const Rational& a) {
    Rational r = 0;
    for (int k = p.degree(); k >= 0; --k) r = r * a + p[k];
    return r;
}

QSeries random_ell(std::mt19937& rng, int n) {
    oracle::Vec v = oracle::random_vec(rng, 3);
    v[0] = 1;
    return QSeries(v, kExact).truncated(n);
}

// B_0..B_n from Σ_{k<=m} binom(m+1, k) B_k = 0.
oracle::Vec bernoulli_numbers(int n) {
    oracle::Vec b{Rational(1)};
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k) acc += binomial(Rational(m + 1), k) * b[static_cast<std::size_t>(k)];
        b.push_back(-acc / Rational(m + 1));
    }
    return b;
}

} // namespace

TEST_CASE("l = 1 reproduces the binomial-type sequence") {
    const BinomialFamily fam = make_family(parse_family_spec("geom"), 10);
    const ShefferFamily sf = tau_seq(fam, QSeries::constant(1, kExact), 8);
    const PSequence p = p_seq(fam, 8);
    for (int n = 0; n <= 8; ++n) CHECK(sf.tau_polys[static_cast<std::size_t>(n)] == p.polys[static_cast<std::size_t>(n)]);
    CHECK_THROWS_AS(tau_seq(fam, QSeries::constant(2, kExact), 3), DomainError);
}

TEST_CASE("Appell case gives Bernoulli polynomials") {
    const int n = 9;
    const QSeries x = QSeries::identity(n + 1);
    const QSeries ell = inverse((exp(x) - QSeries::constant(1, kExact)).shifted_down(1));
    const ShefferFamily sf = tau_seq(make_family(parse_family_spec("id"), n + 1), ell, n);
    const oracle::Vec b = bernoulli_numbers(n);
    for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= m; ++k)
            CHECK(sf.tau_polys[static_cast<std::size_t>(m)][m - k] == binomial(Rational(m), k) * b[static_cast<std::size_t>(k)]);
}

TEST_CASE("Sheffer addition rule on random data") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 4; ++trial) {
        const BinomialFamily fam = build_family(QSeries::exact(oracle::random_delta(rng, 4)), 9);
        const ShefferFamily sf = tau_seq(fam, random_ell(rng, 9), 7);
        const PSequence p = p_seq(fam, 7);
        const Rational a = oracle::small_rational(rng), b = oracle::small_rational(rng);
        for (int n = 0; n <= 7; ++n) {
            Rational rhs = 0;
            for (int k = 0; k <= n; ++k)
                rhs += binomial(Rational(n), k) * value_at(sf.tau_polys[static_cast<std::size_t>(k)], a) *
                       value_at(p.polys[static_cast<std::size_t>(n - k)], b);
            CHECK(value_at(sf.tau_polys[static_cast<std::size_t>(n)], a + b) == rhs);
        }
        CHECK(generating_function_check(sf, 7));
        CHECK(symbolic_specializes(sf, 5));
        CHECK(theta_check(sf, 6));
    }
}

TEST_CASE("Sheffer resolvent on a random pair") {
    std::mt19937 rng(52);
    const BinomialFamily fam = build_family(QSeries::exact(oracle::random_delta(rng, 3)), 12);
    const ShefferFamily sf = tau_seq(fam, random_ell(rng, 12), 8);
    const AlphaDOperator d{{0, QSeries::monomial(1, 1, kExact)}};
    for (int s = 1; s <= 2; ++s) CHECK(sheffer_resolvent_check(sf, d, s, 4).passed);
}

TEST_CASE("Bernoulli logarithm experiment reports both readings") {
    const BernoulliReport r = bernoulli_log_experiment(4);
    CHECK(r.rhs.size() == 5);
    REQUIRE(r.candidates.size() == 2);
    int best = 0;
    for (const auto& c : r.candidates) {
        CHECK(c.lhs.size() == 5);
        CHECK(c.matching + static_cast<int>(c.diffs.size()) == 5);
        for (const auto& d : c.diffs) CHECK(d.lhs != d.rhs);
        best = std::max(best, c.matching);
    }
    CHECK(best == 5);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("T_n^l trend toward -a T_1^l omega") {
    const ShefferFamily sf = bernoulli_type(60, 24);
    const TnEllTrend t = tn_ell_trend(sf, make_rational(1, 4), {8, 16, 24});
    CHECK(t.samples.size() == 3);
    CHECK(t.decreasing);
}
