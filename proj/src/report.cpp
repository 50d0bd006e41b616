#include "ulog/report.hpp"

#include <cstdio>

namespace ulog {

bool Report::passed() const {
    for (const auto& c : checks)
        if (!c.informational && !c.passed) return false;
    return true;
}

Check& Report::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, false, std::move(detail), {}, Json::object()});
    return checks.back();
}

Check& Report::note(std::string name, std::string detail) {
    checks.push_back({std::move(name), true, true, std::move(detail), {}, Json::object()});
    return checks.back();
}

Json rational_json(const Rational& q) { return to_fraction_string(q); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"num/den\" string", 1, 1);
    return parse_rational(j.get<std::string>());
}

Json param_poly_json(const ParamPoly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t = Json::object();
        for (std::size_t i = 0; i < kSymbolCount; ++i)
            if (m[i] != 0) t[symbol_name(static_cast<Sym>(i))] = m[i];
        t["c"] = rational_json(c);
        out.push_back(std::move(t));
    }
    return out;
}

ParamPoly param_poly_from_json(const Json& j) {
    ParamPoly p;
    for (const auto& t : j) {
        ParamPoly::Monomial m{};
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            const char* name = symbol_name(static_cast<Sym>(i));
            if (t.contains(name)) m[i] = t.at(name).get<std::uint16_t>();
        }
        p += ParamPoly::monomial(rational_from_json(t.at("c")), m);
    }
    return p;
}

namespace {

Json order_json(int order) { return order >= kExact ? Json("exact") : Json(order); }

int order_from_json(const Json& j) { return j.is_string() ? kExact : j.get<int>(); }

} // namespace

Json series_json(const QSeries& u) {
    Json c = Json::array();
    for (const auto& q : u.coeffs()) c.push_back(rational_json(q));
    return Json{{"var", u.var()}, {"order", order_json(u.order())}, {"coeffs", c}};
}

QSeries series_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& q : j.at("coeffs")) c.push_back(rational_from_json(q));
    return QSeries(std::move(c), order_from_json(j.at("order")), j.at("var").get<std::string>());
}

Json series_json(const PSeries& u) {
    Json c = Json::array();
    for (const auto& q : u.coeffs()) c.push_back(param_poly_json(q));
    return Json{{"var", u.var()}, {"order", order_json(u.order())}, {"coeffs", c}};
}

PSeries pseries_from_json(const Json& j) {
    std::vector<ParamPoly> c;
    for (const auto& q : j.at("coeffs")) c.push_back(param_poly_from_json(q));
    return PSeries(std::move(c), order_from_json(j.at("order")), j.at("var").get<std::string>());
}

Json asymptotic_json(const AsymptoticSeries& a) {
    Json body = Json::array();
    for (int k = 0; k < a.body().stored(); ++k) {
        Json by_log = Json::array();
        for (const auto& p : a[k].coeffs()) by_log.push_back(param_poly_json(p));
        body.push_back(by_log);
    }
    return Json{{"exponent", param_poly_json(a.exponent())}, {"order", order_json(a.order())}, {"coeffs", body}};
}

Json to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json diffs = Json::array();
        for (const auto& d : c.diffs)
            diffs.push_back({{"index", d.index}, {"lhs", param_poly_json(d.lhs)}, {"rhs", param_poly_json(d.rhs)}});
        checks.push_back({{"name", c.name},
                          {"status", c.informational ? "info" : (c.passed ? "pass" : "fail")},
                          {"detail", c.detail},
                          {"diffs", diffs},
                          {"values", c.values}});
    }
    return Json{{"suite", r.suite},
                {"title", r.title},
                {"passed", r.passed()},
                {"seconds", r.seconds},
                {"checks", checks}};
}

Report report_from_json(const Json& j) {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.title = j.at("title").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    for (const auto& c : j.at("checks")) {
        Check k;
        k.name = c.at("name").get<std::string>();
        const std::string status = c.at("status").get<std::string>();
        if (status != "info" && status != "pass" && status != "fail")
            throw ParseError("unknown check status '" + status + "'", 1, 1);
        k.informational = status == "info";
        k.passed = status != "fail";
        k.detail = c.at("detail").get<std::string>();
        for (const auto& d : c.at("diffs"))
            k.diffs.push_back({d.at("index").get<int>(), param_poly_from_json(d.at("lhs")), param_poly_from_json(d.at("rhs"))});
        k.values = c.at("values");
        r.checks.push_back(std::move(k));
    }
    return r;
}

std::string to_text(const Report& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    std::string out = "[" + r.suite + "] " + r.title + ": " + (r.passed() ? "PASS" : "FAIL") + " (" + secs + " s)\n";
    for (const auto& c : r.checks) {
        out += "  ";
        out += c.informational ? "info" : (c.passed ? "pass" : "FAIL");
        out += "  " + c.name;
        if (!c.detail.empty()) out += ": " + c.detail;
        out += "\n";
        for (const auto& d : c.diffs)
            out += "      [" + std::to_string(d.index) + "] " + d.lhs.to_string() + "  vs  " + d.rhs.to_string() + "\n";
    }
    return out;
}

} // namespace ulog
