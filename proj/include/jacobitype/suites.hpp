#pragma once

#include <string>
#include <vector>

#include "jacobitype/rational.hpp"
#include "jacobitype/report.hpp"

namespace jacobitype {

/// Parameter ranges for a verification suite.  Empty vectors and a negative
/// n_max select the suite's default grid (the full grid exercised by the
/// acceptance run).  Values are validated per suite; out-of-domain entries
/// (e.g. beta <= -1) raise InvalidGrid.
struct SuiteGrid {
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
    std::vector<Rational> masses_n;  // masses at +1
    std::vector<Rational> masses_m;  // masses at -1
    long n_max = -1;
    unsigned long seed = 20240915;
    int jobs = 1;
};

/// The available suites, in canonical order.
std::vector<std::string> suite_names();

/// Runs one named verification suite over the grid and returns its report.
/// Identical inputs yield identical case outcomes (fixed seed); cases are
/// sorted by parameters, so aggregation is order-independent under --jobs.
/// Throws UnknownSuite / InvalidGrid.
SuiteReport run_suite(const std::string& name, const SuiteGrid& grid = {});

enum class TableFormat { text, csv, json };

/// Renders the operator coefficient table for the given parameters: one row
/// per derivative order i = 1 .. 2*alpha+4, coefficients in the monomial
/// basis ascending by power, rationals as exact "p/q" strings.  A positive
/// float_digits adds decimal approximations in the text format (never used
/// in comparisons).
std::string coefficient_table(long alpha, const Rational& beta, TableFormat format, int float_digits = 0);

}  // namespace jacobitype
