#ifndef ULOG_SUITES_HPP
#define ULOG_SUITES_HPP

// The verification suites shared by the command-line tool, the acceptance
// test and the Python module. Each suite checks one group of identities.

#include "ulog/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ulog {

struct SuiteOptions {
    /// Raise the truncation order of the families (never lowered below what a
    /// check needs).
    std::optional<int> order;
    /// Depth in powers of α^{-1} for the exact identity checks.
    std::optional<int> depth;
    /// Seed for the random family and random coefficient columns.
    std::uint32_t seed = 20241;
};

struct SuiteInfo {
    std::string name;
    std::string title;
    std::function<Report(const SuiteOptions&)> run;
};

/// In acceptance order.
const std::vector<SuiteInfo>& suites();

/// Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opts = {});

/// f = x + Σ_{k=2..degree} c_k x^k, c_k = p/q with |p| <= 3, 1 <= q <= 4.
QSeries random_polynomial_family(std::uint32_t seed, int degree);

} // namespace ulog

#endif
