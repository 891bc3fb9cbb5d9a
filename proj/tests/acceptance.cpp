// Acceptance suite: runs every verification family over its full grid with
// zero tolerance and prints one pass/fail line per criterion.  Exit status is
// the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "jacobitype/suites.hpp"

namespace {

using jacobitype::Rational;
using jacobitype::run_suite;
using jacobitype::SuiteGrid;
using jacobitype::SuiteReport;

struct Criterion {
    std::string label;
    std::function<std::string()> run;  // empty string = pass, else failure detail
};

std::string suite_failure(const SuiteReport& report) {
    if (report.all_passed()) return {};
    for (const auto& c : report.cases)
        if (c.status != jacobitype::CaseStatus::pass) {
            std::string where;
            for (const auto& [k, v] : c.params) where += " " + k + "=" + v;
            return "suite " + report.suite + " failed at" + where + ": " + c.detail;
        }
    return "suite " + report.suite + " failed";
}

std::string expect_suite_passes(const std::string& name, long max_millis = 0) {
    const SuiteReport report = run_suite(name, SuiteGrid{});
    if (auto failure = suite_failure(report); !failure.empty()) return failure;
    if (max_millis > 0 && report.runtime_millis > max_millis)
        return "suite " + name + " took " + std::to_string(report.runtime_millis) + " ms (budget " +
               std::to_string(max_millis) + " ms)";
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 route equivalence: five coefficientwise-identical constructions over the full grid, under 10 s",
         [] { return expect_suite_passes("routes", 10000); }},
        {"2 coefficient identities: double-sum vs Leibniz form, top coefficient, bit-exact golden table",
         [] { return expect_suite_passes("coeffs"); }},
        {"3 spectral equation: zero residual for n <= 12, N in {1, 1/3, 7}, combined eigenvalue recomputed",
         [] { return expect_suite_passes("eigen"); }},
        {"4 mirror case: zero residual for the mass-at-minus-one equation",
         [] { return expect_suite_passes("mirror"); }},
        {"5 kernel identities: modifier and plain-polynomial identities, modifier eigen-equation",
         [] { return expect_suite_passes("kernel"); }},
        {"6 symmetry: zero defect on 20 fixed-seed pairs per grid point, boundary-form identities",
         [] { return expect_suite_passes("symmetry"); }},
        {"7 orthogonality: Gram matrix diagonal positive, off-diagonal zero, spot value",
         [] { return expect_suite_passes("gram"); }},
        {"8 Jacobi basics: eigen-equation, differentiation formulas, contiguous relations, reflection, summation",
         [] { return expect_suite_passes("basics"); }},
        {"9 ultraspherical link, Leibniz and Bessel identities, quadratic substitution",
         [] {
             if (auto failure = expect_suite_passes("ultra"); !failure.empty()) return failure;
             return expect_suite_passes("substitution");
         }},
        {"10 end-to-end: all suites pass in under 60 s and the JSON report round-trips",
         [] {
             const auto start = std::chrono::steady_clock::now();
             for (const auto& name : jacobitype::suite_names()) {
                 const SuiteReport report = run_suite(name, SuiteGrid{});
                 if (auto failure = suite_failure(report); !failure.empty()) return failure;
                 if (jacobitype::report_from_json(jacobitype::to_json(report)) != report)
                     return std::string("JSON report round-trip changed the report for suite ") + name;
             }
             const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - start)
                                      .count();
             if (elapsed > 60000)
                 return "all-suite run took " + std::to_string(elapsed) + " ms (budget 60000 ms)";
             return std::string{};
         }},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            failure = criterion.run();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const auto millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty()) {
            std::cout << "[PASS] criterion " << criterion.label << " (" << millis << " ms)\n";
        } else {
            ++failures;
            std::cout << "[FAIL] criterion " << criterion.label << " (" << millis << " ms)\n       " << failure
                      << "\n";
        }
    }
    std::cout << (failures == 0 ? "RESULT: all 10 acceptance criteria passed\n"
                                : "RESULT: " + std::to_string(failures) + " acceptance criteria failed\n");
    return failures;
}
