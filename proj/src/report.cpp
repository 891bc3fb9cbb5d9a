#include "jacobitype/report.hpp"

#include <sstream>
#include <stdexcept>

namespace jacobitype {

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::error: return "error";
    }
    return "error";
}

CaseStatus case_status_from_string(const std::string& s) {
    if (s == "pass") return CaseStatus::pass;
    if (s == "fail") return CaseStatus::fail;
    if (s == "error") return CaseStatus::error;
    throw std::invalid_argument("unknown case status: " + s);
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases) {
        cases.push_back({{"params", c.params}, {"status", to_string(c.status)}, {"detail", c.detail}});
    }
    return {{"suite", report.suite},
            {"cases", std::move(cases)},
            {"summary",
             {{"total", report.summary.total},
              {"passed", report.summary.passed},
              {"failed", report.summary.failed},
              {"errored", report.summary.errored}}},
            {"runtimeMillis", report.runtime_millis}};
}

SuiteReport report_from_json(const nlohmann::json& j) {
    SuiteReport report;
    report.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("cases")) {
        CaseResult cr;
        cr.params = c.at("params").get<std::map<std::string, std::string>>();
        cr.status = case_status_from_string(c.at("status").get<std::string>());
        cr.detail = c.at("detail").get<std::string>();
        report.cases.push_back(std::move(cr));
    }
    const auto& s = j.at("summary");
    report.summary = {s.at("total").get<long>(), s.at("passed").get<long>(), s.at("failed").get<long>(),
                      s.at("errored").get<long>()};
    report.runtime_millis = j.at("runtimeMillis").get<long>();
    return report;
}

std::string render_text(const SuiteReport& report) {
    std::ostringstream os;
    os << "suite: " << report.suite << "\n";
    for (const auto& c : report.cases) {
        os << "  [" << to_string(c.status) << "] ";
        bool first = true;
        for (const auto& [k, v] : c.params) {
            if (!first) os << " ";
            first = false;
            os << k << "=" << v;
        }
        if (!c.detail.empty()) os << "  -- " << c.detail;
        os << "\n";
    }
    os << "  summary: total=" << report.summary.total << " passed=" << report.summary.passed
       << " failed=" << report.summary.failed << " errored=" << report.summary.errored << " ("
       << report.runtime_millis << " ms)\n";
    return os.str();
}

}  // namespace jacobitype
