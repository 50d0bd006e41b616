#ifndef ULOG_REPORT_HPP
#define ULOG_REPORT_HPP

// Machine-readable results. Rationals are written as "num/den" strings,
// series as coefficient arrays with their order and variable.

#include "ulog/asymptotic.hpp"
#include "ulog/stirling.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace ulog {

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    bool passed = false;
    /// A reported quantity rather than a pass/fail condition.
    bool informational = false;
    std::string detail;
    std::vector<CoefficientDiff> diffs;
    /// Free-form values (numbers as decimal strings, exact data as JSON).
    Json values = Json::object();

    friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
    std::string suite;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;

    /// Every non-informational check passed.
    bool passed() const;
    Check& add(std::string name, bool passed, std::string detail = {});
    Check& note(std::string name, std::string detail = {});

    friend bool operator==(const Report&, const Report&) = default;
};

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// [{"s": e, "H": e, "A": e, "c": "num/den"}, ...] in monomial order.
Json param_poly_json(const ParamPoly& p);
ParamPoly param_poly_from_json(const Json& j);

Json series_json(const QSeries& u);
QSeries series_from_json(const Json& j);
Json series_json(const PSeries& u);
PSeries pseries_from_json(const Json& j);

Json asymptotic_json(const AsymptoticSeries& a);

Json to_json(const Report& r);
Report report_from_json(const Json& j);

/// Human-readable summary, one line per check.
std::string to_text(const Report& r);

} // namespace ulog

#endif
