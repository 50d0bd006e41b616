#include "doctest.h"
#include "oracles.hpp"

#include "ulog/family_spec.hpp"
#include "ulog/numeric.hpp"
#include "ulog/stirling.hpp"

using namespace ulog;

namespace {

// Classical case from ln Γ(z+1) ~ z ln z - z + ½ ln(2πz) + Σ_m B_2m/(2m(2m-1) z^{2m-1})
// with p_s(s/α) = Γ(s/α+1)/Γ(s(1-α)/α+1):
//   g_1 = -1 - ((1-α)/α) ln(1-α),  g_2 = -½ ln(1-α),
//   g_{2m+1} = B_2m/(2m(2m-1)) α^{2m-1} (1 - (1-α)^{1-2m}),  g_{2m+2} = 0.
oracle::Vec classical_g(int k, int n) {
    oracle::Vec g(static_cast<std::size_t>(n) + 1, Rational(0));
    if (k == 1) {
        // -1 + (1-α) Σ_{j>=1} α^{j-1}/j
        for (int j = 1; j <= n + 1; ++j) {
            if (j - 1 <= n) g[static_cast<std::size_t>(j - 1)] += Rational(1, j);
            if (j <= n) g[static_cast<std::size_t>(j)] -= Rational(1, j);
        }
        g[0] -= 1;
        return g;
    }
    if (k == 2) {
        for (int j = 1; j <= n; ++j) g[static_cast<std::size_t>(j)] = Rational(1, 2 * j);
        return g;
    }
    if (k % 2 == 0) return g;
    const int m = (k - 1) / 2;
    const Rational b2m[] = {1, Rational(1, 6), Rational(-1, 30), Rational(1, 42), Rational(-1, 30)};
    const Rational c = b2m[m] / Rational(2 * m * (2 * m - 1));
    const int p = 2 * m - 1;
    // α^p (1 - Σ_j binom(p+j-1, j) α^j)
    for (int j = 1; p + j <= n; ++j) g[static_cast<std::size_t>(p + j)] = -c * binomial(Rational(p + j - 1), j);
    return g;
}

} // namespace

TEST_CASE("classical case against the Gamma-function expansion") {
    const int n = 12;
    const BinomialFamily fam = make_family(parse_family_spec("exp1"), 24);
    const StirlingExpansion ex = stirling_terms(fam, 5);
    REQUIRE(ex.max_k() >= 6);
    for (int k = 1; k <= 6; ++k) {
        const oracle::Vec want = classical_g(k, n);
        for (int j = 0; j <= n; ++j) CHECK(ex.term(k)[j] == want[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("closed forms of the 1/s and 1/s^2 terms on random families") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 4; ++trial) {
        const BinomialFamily fam = build_family(QSeries::exact(oracle::random_delta(rng, 4)), 18);
        const StirlingExpansion ex = stirling_terms(fam, 3);
        const QSeries g3 = closed_form_g3(fam), g4 = closed_form_g4(fam);
        for (int j = 0; j <= 10; ++j) {
            CHECK(ex.term(3)[j] == g3[j]);
            CHECK(ex.term(4)[j] == g4[j]);
        }
    }
}

TEST_CASE("log identity on a random family") {
    std::mt19937 rng(42);
    const BinomialFamily fam = build_family(QSeries::exact(oracle::random_delta(rng, 5)), 10);
    for (LogIdentity which : {LogIdentity::OperatorLog, LogIdentity::ExponentialForm}) {
        const IdentityReport r = verify_log_identity(fam, which, 5);
        CHECK(r.passed);
        CHECK(r.diffs.empty());
        CHECK(r.lhs.size() == 6);
    }
}

TEST_CASE("invariance under f -> f e^(-Ax) on random families") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 3; ++trial) {
        const QSeries f = QSeries::exact(oracle::random_delta(rng, 3)).truncated(16);
        const Rational a = oracle::small_rational(rng, 1, 3);
        if (a == 0) continue;
        const InvarianceReport inv = invariance_check(f, a, 16, 4);
        CHECK(inv.omega_matches);
        for (const auto& t : inv.terms) {
            if (t.k <= 2) {
                CHECK_FALSE(t.invariant);
                CHECK(t.defect_matches);
            } else {
                CHECK(t.invariant);
            }
        }
    }
}

TEST_CASE("nu example closed sums") {
    const NuExampleReport r = nu_example_check(6);
    CHECK(r.s1_matches);
    CHECK(r.s0_matches);
    // first terms by hand: -α - (3/4)α² and ½·2α
    CHECK(r.s1_expected[1] == -1);
    CHECK(r.s1_expected[2] == make_rational(-3, 4));
    CHECK(r.s0_expected[1] == 1);
}

TEST_CASE("classical truncation error follows the first nonzero omitted term") {
    const BinomialFamily fam = make_family(parse_family_spec("exp1"), 90);
    const StirlingNumericReport r = stirling_numeric(fam, make_rational(1, 2), 20, 40);
    // g_4 = 0, so the error is g_5(1/2)/n^3 + O(n^-5), g_5(1/2) = 7/2880.
    for (const auto& [n, err] : {std::pair{20, r.error1}, std::pair{40, r.error2}}) {
        const HighPrec predicted = to_high(make_rational(7, 2880)) / HighPrec(n * n * n);
        CHECK(abs(err / predicted - 1) < HighPrec("0.01"));
    }
    CHECK(r.ratio > HighPrec("7.8"));
    CHECK(r.ratio < HighPrec("8.2"));
}

TEST_CASE("limit formulas in the classical case") {
    const BinomialFamily fam = make_family(parse_family_spec("exp1"), 90);
    const LimitReport c = limit_check(fam, LimitKind::Conclusion, 2, 8, 32, 8);
    // ω(x) = -ln(1-x) for e^x - 1; targets come from truncated series summed to 1e-20
    CHECK(abs(c.target - log(HighPrec(2))) < HighPrec("1e-20"));
    CHECK(c.monotone);
    const LimitReport f = limit_check(fam, LimitKind::First, 2, 8, 32, 8);
    CHECK(abs(f.target - 1) < HighPrec("1e-20"));
    CHECK(f.samples.size() == 4);
}
