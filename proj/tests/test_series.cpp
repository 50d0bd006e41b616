#include "doctest.h"
#include "oracles.hpp"

#include "ulog/asymptotic.hpp"
#include "ulog/errors.hpp"
#include "ulog/param_poly.hpp"
#include "ulog/series.hpp"

using namespace ulog;

namespace {

QSeries series_of(const oracle::Vec& v, int order) { return QSeries(v, order); }

bool matches(const QSeries& u, const oracle::Vec& v, int n) {
    for (int k = 0; k <= n; ++k)
        if (u[k] != oracle::at(v, k)) return false;
    return true;
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("6/8") == make_rational(3, 4));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(to_fraction_string(make_rational(-3, 4)) == "-3/4");
    CHECK(to_fraction_string(Rational(2)) == "2/1");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK(binomial(Rational(5), 2) == Rational(10));
    CHECK(binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
}

TEST_CASE("multiplication matches the convolution oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const oracle::Vec a = oracle::random_vec(rng, n), b = oracle::random_vec(rng, n);
        const QSeries p = series_of(a, n) * series_of(b, n);
        CHECK(p.order() == n);
        CHECK(matches(p, oracle::mul(a, b, n), n));
    }
}

TEST_CASE("exact polynomials multiply without truncation") {
    const QSeries a = QSeries::exact({1, 1});
    const QSeries b = a * a * a;
    CHECK(b.is_exact());
    CHECK(b.coeffs() == std::vector<Rational>{1, 3, 3, 1});
    CHECK(b[40] == 0);
}

TEST_CASE("inverse matches the recurrence oracle") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        oracle::Vec a = oracle::random_vec(rng, n);
        if (a[0] == 0) a[0] = 1;
        const QSeries inv = inverse(series_of(a, n));
        CHECK(matches(inv, oracle::reciprocal(a, n), n));
        CHECK(matches(inv * series_of(a, n), oracle::Vec{1}, n));
    }
    CHECK_THROWS_AS(inverse(QSeries({0, 1}, 4)), DomainError);
}

TEST_CASE("composition matches Horner evaluation") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const oracle::Vec outer = oracle::random_vec(rng, n);
        oracle::Vec inner = oracle::random_vec(rng, n);
        inner[0] = 0;
        const QSeries c = compose(series_of(outer, n), series_of(inner, n));
        CHECK(matches(c, oracle::compose(outer, inner, n), n));
    }
    CHECK_THROWS_AS(compose(QSeries({1, 1}, 3), QSeries({1, 1}, 3)), DomainError);
}

TEST_CASE("coefficients past the order are refused") {
    const QSeries u({1, 2, 3}, 2);
    CHECK(u[2] == 3);
    CHECK_THROWS_AS(u[3], TruncationError);
    CHECK_THROWS_AS(u.with_order(5), TruncationError);
    CHECK_THROWS_AS(QSeries({1, 1}, 3).shifted_down(1), DomainError);
}

TEST_CASE("exp and log are mutually inverse") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        oracle::Vec a = oracle::random_vec(rng, n);
        a[0] = 1;
        const QSeries u = series_of(a, n);
        CHECK(exp(log(u)) == u);
    }
    // log(1/(1-x)) = Σ x^k/k
    const QSeries l = log(inverse(QSeries({1, -1}, 8)));
    for (int k = 1; k <= 8; ++k) CHECK(l[k] == make_rational(1, k));
}

TEST_CASE("symbolic powers specialize to integer powers") {
    std::mt19937 rng(15);
    const ParamPoly s = ParamPoly::symbol(Sym::s);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        oracle::Vec a = oracle::random_vec(rng, n);
        a[0] = 1;
        const PSeries p = pow_param(series_of(a, n), s);
        for (int m = 0; m <= 4; ++m) {
            const oracle::Vec direct = oracle::pow(a, m, n);
            for (int k = 0; k <= n; ++k) CHECK(p[k].specialize(Sym::s, m) == ParamPoly(direct[static_cast<std::size_t>(k)]));
        }
    }
}

TEST_CASE("parameter polynomials form a commutative ring") {
    std::mt19937 rng(16);
    const ParamPoly s = ParamPoly::symbol(Sym::s), h = ParamPoly::symbol(Sym::H), A = ParamPoly::symbol(Sym::A);
    auto random_pp = [&] {
        ParamPoly p = ParamPoly(oracle::small_rational(rng));
        p += s * ParamPoly(oracle::small_rational(rng));
        p += h * s * ParamPoly(oracle::small_rational(rng));
        p += A * ParamPoly(oracle::small_rational(rng));
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const ParamPoly a = random_pp(), b = random_pp(), c = random_pp();
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == ParamPoly());
    }
    CHECK((s + ParamPoly(1)).pow(2) == s * s + s * ParamPoly(2) + ParamPoly(1));
    for (long m = 0; m <= 6; ++m)
        for (long k = 0; k <= 4; ++k) CHECK(binomial(s, k).specialize(Sym::s, m) == ParamPoly(binomial(Rational(m), k)));
    CHECK(ParamPoly(make_rational(2, 4)) == ParamPoly(make_rational(1, 2)));
}

TEST_CASE("asymptotic series: logarithm and division") {
    const ParamPoly s = ParamPoly::symbol(Sym::s);
    // α^s (1 + α^{-1}): log body is ln(1 + α^{-1}).
    const AsymptoticSeries a(s, PSeries({ParamPoly(1), ParamPoly(1)}, 6, "1/a"));
    const AsymptoticSeries l = log(a);
    CHECK(l[0][1] == s);
    for (int k = 1; k <= 6; ++k) CHECK(l.plain(k) == ParamPoly(make_rational(k % 2 ? 1 : -1, k)));
    const AsymptoticSeries q = a / a;
    CHECK(q.exponent() == ParamPoly());
    CHECK(q.plain(0) == ParamPoly(1));
    for (int k = 1; k <= 6; ++k) CHECK(q.plain(k).is_zero());
}
