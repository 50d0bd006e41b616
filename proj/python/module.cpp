#include "ulog/family_spec.hpp"
#include "ulog/report.hpp"
#include "ulog/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ulog;

namespace {

// Structured results cross over as JSON text; the Python side decodes.
std::string suite_json(const std::string& name, std::optional<int> order, std::optional<int> depth, std::uint32_t seed) {
    SuiteOptions opts;
    opts.order = order;
    opts.depth = depth;
    opts.seed = seed;
    Report r;
    {
        py::gil_scoped_release release;
        r = run_suite(name, opts);
    }
    return to_json(r).dump();
}

std::vector<std::string> coefficients(const QSeries& u, int n) {
    std::vector<std::string> out;
    for (int k = 0; k <= n; ++k) out.push_back(to_fraction_string(u[k]));
    return out;
}

} // namespace

PYBIND11_MODULE(_ulog, m) {
    m.doc() = "exact binomial-type series and identity checks";

    m.def("suite_names", [] {
        std::vector<std::string> names;
        for (const auto& s : suites()) names.push_back(s.name);
        return names;
    });
    m.def("run_suite_json", &suite_json, py::arg("name"), py::arg("order") = py::none(), py::arg("depth") = py::none(),
          py::arg("seed") = 20241);

    m.def("canonical_family", [](const std::string& text) { return parse_family_spec(text).to_string(); });

    m.def(
        "family_series",
        [](const std::string& text, int order) {
            const BinomialFamily fam = make_family(parse_family_spec(text), order);
            py::dict d;
            d["f"] = coefficients(fam.f, order);
            d["phi"] = coefficients(fam.phi, order);
            d["tau_f"] = coefficients(fam.tau_f, order);
            d["omega"] = coefficients(fam.omega, order);
            return d;
        },
        py::arg("f"), py::arg("order"));

    m.def(
        "p_sequence",
        [](const std::string& text, int n) {
            const PSequence seq = p_seq(make_family(parse_family_spec(text), n), n);
            std::vector<std::vector<std::string>> rows;
            for (const auto& p : seq.polys) rows.push_back(coefficients(p, p.degree()));
            return rows;
        },
        py::arg("f"), py::arg("n"));

    m.def(
        "q_coefficients_json",
        [](const std::string& text, int n) {
            Json rows = Json::array();
            for (const auto& q : q_at_zero(make_family(parse_family_spec(text), n + 1), n)) rows.push_back(param_poly_json(q));
            return rows.dump();
        },
        py::arg("f"), py::arg("n"));
}
