#include "doctest.h"
#include "oracles.hpp"

#include "ulog/appendix.hpp"
#include "ulog/family_spec.hpp"

using namespace ulog;

namespace {

const ParamPoly kS = ParamPoly::symbol(Sym::s);

Column random_column(std::mt19937& rng, int n) {
    Column c;
    for (int k = 0; k <= n; ++k) c.push_back(ParamPoly(oracle::small_rational(rng)) + kS * oracle::small_rational(rng));
    return c;
}

BinomialFamily random_family(std::mt19937& rng, int order) {
    return build_family(QSeries::exact(oracle::random_delta(rng, 4)), order);
}

} // namespace

TEST_CASE("conjugated step: series route and coefficient law") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 4; ++trial) {
        const BinomialFamily fam = random_family(rng, 12);
        const Column g = random_column(rng, 8);
        const Column a = conjugated_step_series(fam, g), b = conjugated_step_law(fam, g);
        CHECK(a.size() == 8);
        CHECK(a == b);
    }
    CHECK_THROWS_AS(conjugated_step_series(make_family(parse_family_spec("exp1"), 4), Column{ParamPoly(1)}), TruncationError);
}

TEST_CASE("binomial recurrence over the conjugated table") {
    std::mt19937 rng(62);
    const BinomialFamily fam = random_family(rng, 14);
    CHECK(prop_A2_check(fam, random_column(rng, 9), 4, 4));
}

TEST_CASE("l_s is 1 when g is the q column") {
    const BinomialFamily fam = make_family(parse_family_spec("geom"), 12);
    const Column q = q_at_zero(fam, 6);
    const EllReport r = ell_s(fam, q, 5);
    CHECK(r.agree);
    CHECK(r.from_quotient.plain(0) == ParamPoly(1));
    for (int k = 1; k <= 5; ++k) CHECK(r.from_quotient.plain(k).is_zero());
}

TEST_CASE("l_s routes agree on random columns") {
    std::mt19937 rng(63);
    const BinomialFamily fam = random_family(rng, 14);
    CHECK(ell_s(fam, random_column(rng, 7), 5).agree);
}

TEST_CASE("closed-form resolvent at generic s") {
    std::mt19937 rng(64);
    const BinomialFamily fam = random_family(rng, 16);
    const QSeries g = QSeries::exact(oracle::random_vec(rng, 3));
    for (const Rational& s : {make_rational(5, 2), make_rational(-3, 2), make_rational(1, 3)}) {
        const ClosedFormReport r = resolvent_closed_form(fam, g, s, 4, 4);
        CHECK(r.positive_powers_cancel);
        CHECK(r.mismatches == 0);
    }
    CHECK_THROWS_AS(resolvent_closed_form(fam, g, Rational(2), 4, 4), DomainError);
}

TEST_CASE("conjugation formula, both graded forms") {
    std::mt19937 rng(65);
    const BinomialFamily fam = random_family(rng, 14);
    const AlphaDOperator t{{0, QSeries::exact({0, 1, 1})}, {1, QSeries::monomial(1, 2, kExact)}};
    for (int s : {1, 2, 4}) {
        const ConjugationReport r = conjugated_expectation(fam, t, s, 4);
        CHECK(r.zero_form);
        CHECK(r.shifted_form);
    }
    CHECK_THROWS_AS(conjugated_expectation(fam, t, 0, 4), DomainError);
}
