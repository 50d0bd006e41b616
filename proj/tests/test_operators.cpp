#include "doctest.h"
#include "oracles.hpp"

#include "ulog/diffop.hpp"
#include "ulog/family_spec.hpp"
#include "ulog/ncpoly.hpp"
#include "ulog/propositions.hpp"

using namespace ulog;
using L = Letter;

namespace {

NCWord random_word(std::mt19937& rng, int max_len) {
    NCWord w;
    const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    for (int i = 0; i < len; ++i) w.push_back(rng() % 2 ? L::Sigma : L::D);
    return w;
}

// Letters act right to left: the last letter touches g first.
QSeries apply_word(const NCWord& w, const QSeries& sigma, const QSeries& g) {
    QSeries r = g;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = *it == L::D ? derive(r) : sigma * r;
    return r;
}

bool same_up_to(const QSeries& a, const QSeries& b, int n) {
    for (int k = 0; k <= n; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

} // namespace

TEST_CASE("normal ordering agrees with nested application") {
    std::mt19937 rng(31);
    const int n = 10;
    for (int trial = 0; trial < 40; ++trial) {
        const QSeries sigma(oracle::random_vec(rng, n + 8), n + 8, "s");
        NCPoly p;
        for (int t = 0; t < 3; ++t) p += NCPoly::word(random_word(rng, 5), oracle::small_rational(rng));
        const DiffOperator op = realize(p, LetterValues{sigma, QSeries::constant(1, kExact, "s")});
        const QSeries g(oracle::random_vec(rng, n + 8), n + 8, "s");
        QSeries expected(std::vector<Rational>{}, kExact, "s");
        for (const auto& [w, c] : p.terms()) expected += apply_word(w, sigma, g).scaled(c);
        CHECK(same_up_to(op.apply(g), expected, n));
    }
}

TEST_CASE("shape coefficients round trip") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<NCPoly> alphas(1 + rng() % 4);
        for (auto& a : alphas) a = NCPoly::word(random_word(rng, 4), oracle::small_rational(rng));
        while (alphas.size() > 1 && alphas.back().is_zero()) alphas.pop_back();
        CHECK(shape_coefficients(from_shape(alphas)) == alphas);
    }
    CHECK_THROWS_AS(shape_coefficients(NCPoly::word({L::E, L::E})), DomainError);
    CHECK_THROWS_AS(shape_coefficients(NCPoly::word({L::E, L::Sigma})), DomainError);
    CHECK_THROWS_AS(shape_coefficients(NCPoly::word({L::Sigma})), DomainError);
}

TEST_CASE("first T-operators in words") {
    CHECK(shape_coefficients(nu_power(0)) == std::vector<NCPoly>{NCPoly::word({})});
    CHECK(shape_coefficients(nu_power(1))[0] == NCPoly::word({L::Sigma, L::D, L::D}, make_rational(1, 2)));
    const NCPoly t2 = NCPoly::word({L::Sigma, L::D, L::D, L::Sigma, L::D, L::D}, make_rational(1, 4)) -
                      NCPoly::word({L::Sigma, L::D, L::Sigma, L::D, L::D, L::D}, make_rational(1, 6)) +
                      NCPoly::word({L::Sigma, L::Sigma, L::D, L::D, L::D, L::D}, make_rational(1, 24));
    CHECK(shape_coefficients(nu_power(2))[0] == t2);
    for (int n = 0; n <= 4; ++n) CHECK(matrix_row(n) == shape_coefficients(nu_power(n)));
}

TEST_CASE("the lambda-twisted transform reduces to the plain one at lambda = 1") {
    for (int n = 0; n <= 4; ++n) CHECK(nu_power(n, true).without_lambda() == nu_power(n));
}

TEST_CASE("T_1 acts as (1/2) sigma d^2/ds^2") {
    const BinomialFamily fam = make_family(parse_family_spec("geom"), 14);
    const QSeries sigma = letter_values(fam, "s").sigma;
    // σ = s/ω'(s)
    CHECK(same_up_to(sigma * derive(fam.omega).renamed("s"), QSeries::identity(kExact, "s"), 12));
    const DiffOperator t1 = build_Tn(fam, 1);
    for (int m = 0; m <= 6; ++m) {
        const QSeries g = QSeries::monomial(1, m, kExact, "s");
        const QSeries expected = m >= 2 ? (sigma * QSeries::monomial(Rational(m * (m - 1)), m - 2, kExact, "s")).scaled(make_rational(1, 2))
                                        : QSeries(std::vector<Rational>{}, kExact, "s");
        CHECK(same_up_to(t1.apply(g), expected, 12));
    }
}

TEST_CASE("shift/derivative identity on random polynomials") {
    std::mt19937 rng(33);
    const ParamPoly s = ParamPoly::symbol(Sym::s);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<ParamPoly> c;
        for (int k = 0; k <= 4; ++k) c.push_back(ParamPoly(oracle::small_rational(rng)) + s * ParamPoly(oracle::small_rational(rng)));
        const PSeries f(c, kExact);
        for (int n = 0; n <= 3; ++n) {
            const IdentitySides sides = shift_derivative_identity(f, n);
            CHECK(sides.lhs == sides.rhs);
        }
    }
}

TEST_CASE("integral form of T_n on a random family") {
    std::mt19937 rng(34);
    const QSeries f = QSeries::exact(oracle::random_delta(rng, 4));
    const BinomialFamily fam = build_family(f, 14);
    for (int n = 1; n <= 2; ++n)
        for (int m = 0; m <= 5; ++m) {
            const QSeries g = QSeries::monomial(1, m, kExact, "s");
            CHECK(same_up_to(build_Tn(fam, n).apply(g), tn_integral(fam, n, g), 8));
        }
}
