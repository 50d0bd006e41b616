#include "doctest.h"
#include "oracles.hpp"

#include "ulog/family_spec.hpp"
#include "ulog/report.hpp"
#include "ulog/suites.hpp"

using namespace ulog;

namespace {

ParseError parse_error_of(std::string_view text) {
    try {
        parse_family_spec(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error for " << text);
    return ParseError("", 0, 0);
}

ParamPoly random_param_poly(std::mt19937& rng) {
    ParamPoly p;
    for (int t = 0; t < 3; ++t) {
        ParamPoly::Monomial m{};
        for (auto& e : m) e = static_cast<std::uint16_t>(rng() % 3);
        p += ParamPoly::monomial(oracle::small_rational(rng, 50, 97), m);
    }
    return p;
}

} // namespace

TEST_CASE("family specs: presets, polynomials and lists") {
    for (const auto& name : preset_names()) {
        const FamilySpec spec = parse_family_spec(name);
        CHECK(spec.kind == FamilySpec::Kind::Preset);
        CHECK(parse_family_spec(spec.to_string()) == spec);
    }
    const FamilySpec poly = parse_family_spec("poly(1, 1/2, -3/4)");
    CHECK(poly.kind == FamilySpec::Kind::Poly);
    const QSeries f = family_series(poly, 6);
    CHECK(f[1] == 1);
    CHECK(f[2] == make_rational(1, 2));
    CHECK(f[3] == make_rational(-3, 4));
    CHECK(f[4] == 0);
    CHECK(parse_family_spec(poly.to_string()) == poly);
    const FamilySpec list = parse_family_spec(" [0, 1, 2] ");
    CHECK(family_series(list, 4)[2] == 2);
    // geom: x/(1-x)
    const QSeries g = family_series(parse_family_spec("geom"), 6);
    for (int k = 1; k <= 6; ++k) CHECK(g[k] == 1);
}

TEST_CASE("family spec errors carry line and column") {
    const ParseError unknown = parse_error_of("exp2");
    CHECK(unknown.line() == 1);
    CHECK(unknown.column() == 1);
    const ParseError bad = parse_error_of("poly(1/2, x)");
    CHECK(bad.column() == 11);
    const ParseError wrapped = parse_error_of("poly(1,\n  q)");
    CHECK(wrapped.line() == 2);
    CHECK(wrapped.column() == 3);
    const ParseError trailing = parse_error_of("id x");
    CHECK(trailing.column() == 4);
    // f must be x + O(x^2)
    CHECK_THROWS_AS(parse_family_spec("poly(2)"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("[1, 1]"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("poly(1, 1/0)"), ParseError);
}

TEST_CASE("rationals and parameter polynomials serialize losslessly") {
    CHECK(rational_json(make_rational(-6, 4)) == "-3/2");
    CHECK(rational_json(Rational(5)) == "5/1");
    std::mt19937 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational q = oracle::small_rational(rng, 1000, 997);
        CHECK(rational_from_json(rational_json(q)) == q);
        const ParamPoly p = random_param_poly(rng);
        CHECK(param_poly_from_json(Json::parse(param_poly_json(p).dump())) == p);
    }
}

TEST_CASE("series serialize with their order") {
    std::mt19937 rng(72);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng() % 9);
        const QSeries u(oracle::random_vec(rng, n), trial % 3 == 0 ? kExact : n, "a");
        const Json j = Json::parse(series_json(u).dump());
        CHECK(series_from_json(j) == u);
        CHECK(series_from_json(j).var() == "a");
        std::vector<ParamPoly> c;
        for (int k = 0; k <= n; ++k) c.push_back(random_param_poly(rng));
        const PSeries p(c, n, "1/a");
        CHECK(pseries_from_json(Json::parse(series_json(p).dump())) == p);
    }
    CHECK(series_json(QSeries::exact({1, 2}))["order"] == "exact");
}

TEST_CASE("reports round-trip through JSON") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        Report r;
        r.suite = "suite" + std::to_string(trial);
        r.title = "random report";
        r.seconds = static_cast<double>(rng() % 1000) / 8;
        const int checks = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < checks; ++i) {
            Check& c = rng() % 3 ? r.add("check " + std::to_string(i), rng() % 2, "detail") : r.note("note " + std::to_string(i));
            if (rng() % 2) c.diffs.push_back({static_cast<int>(rng() % 7), random_param_poly(rng), random_param_poly(rng)});
            c.values["x"] = "1/3";
        }
        const Report back = report_from_json(Json::parse(to_json(r).dump(2)));
        CHECK(back == r);
        CHECK(back.passed() == r.passed());
    }
}

TEST_CASE("report status ignores informational checks") {
    Report r;
    r.add("a", true);
    r.note("b");
    CHECK(r.passed());
    CHECK(to_json(r)["checks"][1]["status"] == "info");
    r.add("c", false);
    CHECK_FALSE(r.passed());
    CHECK(to_text(r).find("FAIL") != std::string::npos);
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(run_suite("nonexistent"), std::invalid_argument);
    CHECK(suites().size() == 10);
    const Report r = run_suite("nu-example");
    CHECK(r.passed());
    CHECK(r.suite == "nu-example");
}
