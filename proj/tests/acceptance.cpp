// One line per acceptance criterion, in order. Criteria listed with
// --expect-fail are known deviations: they still print FAIL, and the exit
// status is zero only when exactly those criteria fail.

#include "ulog/suites.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <set>

using namespace ulog;

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> expected;
    app.add_option("--expect-fail", expected, "criteria recorded as deviations");
    CLI11_PARSE(app, argc, argv);
    const std::set<int> expect(expected.begin(), expected.end());

    std::set<int> failed;
    int index = 0;
    for (const auto& info : suites()) {
        ++index;
        std::string status, detail;
        try {
            const Report r = run_suite(info.name);
            if (r.passed()) {
                status = "PASS";
            } else {
                failed.insert(index);
                status = expect.count(index) ? "FAIL (recorded deviation)" : "FAIL";
                for (const auto& c : r.checks)
                    if (!c.informational && !c.passed) detail += "; " + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
            }
            detail = " (" + std::to_string(r.seconds).substr(0, 5) + " s)" + detail;
        } catch (const std::exception& e) {
            failed.insert(index);
            status = "FAIL";
            detail = "; threw: " + std::string(e.what());
        }
        std::cout << "criterion " << index << " [" << info.name << "] " << info.title << ": " << status << detail
                  << std::endl;
    }
    return failed == expect ? 0 : 1;
}
