#pragma once

#include <span>
#include <string>
#include <vector>

#include "hamfrac/cli/csv.hpp"
#include "hamfrac/cli/run_config.hpp"

namespace hamfrac::cli {

/// Columns t, ham_value, reference_value, abs_error at probe_x.
CsvTable cmd_solve(const RunConfig& cfg);

/// Columns t, reference_value, then ham_hbar=<h>, abs_error_hbar=<h> per hbar.
CsvTable cmd_hsweep(const RunConfig& cfg, std::span<const double> hbars);

/// Columns t, then reference_alpha=<alpha> per alpha.
CsvTable cmd_alpha_table(const RunConfig& cfg, std::span<const double> alphas);

/// One line per problem; with `json`, one JSON object per line.
std::string cmd_list(bool json);

/// M-th partial sum of the HAM series at (x, t) for each t.
std::vector<double> ham_curve(const ProblemDef& problem, const HamConfig& cfg,
                              SpatialBackend backend, double x, std::span<const double> ts);

/// Writes to a temporary sibling then renames; empty path or "-" writes stdout.
void write_output(const std::string& path, const std::string& content);

}  // namespace hamfrac::cli
