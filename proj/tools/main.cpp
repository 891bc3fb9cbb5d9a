#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacobitype/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::vector<jacobitype::Rational> parse_rationals(const std::vector<std::string>& raw) {
    std::vector<jacobitype::Rational> out;
    out.reserve(raw.size());
    for (const auto& s : raw) out.push_back(jacobitype::Rational::from_string(s));
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and verification of the higher-order Jacobi-type differential operator"};
    app.require_subcommand(1);

    // --- suite ---------------------------------------------------------------
    auto* suite_cmd = app.add_subcommand("suite", "Run a verification suite (or all of them)");
    std::string suite_name = "all";
    std::vector<std::string> alphas, betas, masses_n, masses_m;
    long n_max = -1;
    unsigned long seed = jacobitype::SuiteGrid{}.seed;
    int jobs = 1;
    std::string suite_format = "table";
    std::string out_path;
    suite_cmd->add_option("--suite", suite_name, "Suite name or 'all'")->capture_default_str();
    suite_cmd->add_option("--alpha", alphas, "Restrict the alpha grid (rational strings)");
    suite_cmd->add_option("--beta", betas, "Restrict the beta grid (rational strings)");
    suite_cmd->add_option("--mass-n", masses_n, "Restrict the masses at +1");
    suite_cmd->add_option("--mass-m", masses_m, "Restrict the masses at -1");
    suite_cmd->add_option("--n-max", n_max, "Highest polynomial index checked");
    suite_cmd->add_option("--seed", seed, "Seed for the deterministic test-input sampler")->capture_default_str();
    suite_cmd->add_option("--jobs", jobs, "Run suite cases on this many threads")->capture_default_str();
    suite_cmd->add_option("--format", suite_format, "Report format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    suite_cmd->add_option("--out", out_path, "Write the report to a file instead of stdout");

    // --- table ---------------------------------------------------------------
    auto* table_cmd = app.add_subcommand("table", "Emit the operator coefficient table");
    std::string table_alpha = "0", table_beta = "0";
    std::string table_format = "table";
    int float_digits = 0;
    std::string table_out;
    table_cmd->add_option("--alpha", table_alpha, "Nonnegative integer alpha")->capture_default_str();
    table_cmd->add_option("--beta", table_beta, "Rational beta > -1")->capture_default_str();
    table_cmd->add_option("--format", table_format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    table_cmd->add_option("--float-digits", float_digits,
                          "Also render decimal approximations (text format only)");
    table_cmd->add_option("--out", table_out, "Write the table to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (suite_cmd->parsed()) {
            jacobitype::SuiteGrid grid;
            grid.alphas = parse_rationals(alphas);
            grid.betas = parse_rationals(betas);
            grid.masses_n = parse_rationals(masses_n);
            grid.masses_m = parse_rationals(masses_m);
            grid.n_max = n_max;
            grid.seed = seed;
            grid.jobs = jobs;

            std::vector<std::string> names;
            if (suite_name == "all")
                names = jacobitype::suite_names();
            else
                names.push_back(suite_name);

            bool all_passed = true;
            std::ostringstream text;
            nlohmann::json json_reports = nlohmann::json::array();
            for (const auto& name : names) {
                const auto report = jacobitype::run_suite(name, grid);
                all_passed = all_passed && report.all_passed();
                if (suite_format == "json")
                    json_reports.push_back(jacobitype::to_json(report));
                else
                    text << jacobitype::render_text(report);
            }
            if (suite_format == "json")
                write_output((names.size() == 1 ? json_reports.front() : json_reports).dump(2) + "\n", out_path);
            else
                write_output(text.str(), out_path);
            return all_passed ? kExitOk : kExitVerificationFailure;
        }

        jacobitype::TableFormat fmt = jacobitype::TableFormat::text;
        if (table_format == "csv") fmt = jacobitype::TableFormat::csv;
        if (table_format == "json") fmt = jacobitype::TableFormat::json;
        const auto alpha = jacobitype::Rational::from_string(table_alpha);
        if (!alpha.is_nonnegative_integer())
            throw jacobitype::InvalidGrid("alpha must be a nonnegative integer, got " + table_alpha);
        write_output(jacobitype::coefficient_table(alpha.to_long(), jacobitype::Rational::from_string(table_beta),
                                                   fmt, float_digits),
                     table_out);
        return kExitOk;
    } catch (const jacobitype::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jacobitype::InvalidGrid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}
