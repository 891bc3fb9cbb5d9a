#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace jacobitype {

enum class CaseStatus { pass, fail, error };

std::string to_string(CaseStatus s);
CaseStatus case_status_from_string(const std::string& s);

struct CaseResult {
    std::map<std::string, std::string> params;
    CaseStatus status = CaseStatus::pass;
    std::string detail;

    friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

struct SuiteSummary {
    long total = 0;
    long passed = 0;
    long failed = 0;
    long errored = 0;

    friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    SuiteSummary summary;
    long runtime_millis = 0;

    bool all_passed() const { return summary.failed == 0 && summary.errored == 0; }

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

nlohmann::json to_json(const SuiteReport& report);
SuiteReport report_from_json(const nlohmann::json& j);

/// Human-readable rendering, one line per case.
std::string render_text(const SuiteReport& report);

}  // namespace jacobitype
