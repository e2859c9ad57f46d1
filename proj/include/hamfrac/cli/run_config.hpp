#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamfrac/ham_config.hpp"
#include "hamfrac/problems.hpp"

namespace hamfrac::cli {

/// Invalid command-line or config-file input (exit status 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything one CLI invocation needs. Keys of the flat config file are the
/// field names below; `t_min`/`t_max` default to a and a + 1.
struct RunConfig {
  std::string problem = "diffusion";
  double alpha = 0.999;
  std::string psi = "identity";
  double a = 0.0;
  double hbar = -1.0;
  int m_terms = 2;
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_points = 201;
  double probe_x = 0.1;
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::size_t t_samples = 101;
  std::string output;  // empty or "-" for stdout
  SpatialBackend spatial = SpatialBackend::Exact;

  double t_lo() const { return t_min.value_or(a); }
  double t_hi() const { return t_max.value_or(t_lo() + 1.0); }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Defaults with the problem's spatial window and probe point.
RunConfig defaults_for(std::string_view problem);

/// Sets one field from its textual value; ConfigError on unknown key or bad value.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Applies `key = value` lines ('#' starts a comment) on top of cfg.
void apply_config_text(RunConfig& cfg, std::string_view text);

/// defaults_for(<problem named in text>) with the text applied on top.
RunConfig config_from_text(std::string_view text);

/// Flat key=value rendering that apply_config_text reads back to an equal RunConfig.
std::string format_config(const RunConfig& cfg);

/// Full validation, including the solver-level invariants; throws ConfigError.
void validate(const RunConfig& cfg);

HamConfig to_ham_config(const RunConfig& cfg);

/// t_samples evenly spaced times on [t_lo, t_hi].
std::vector<double> time_samples(const RunConfig& cfg);

double parse_real(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

std::string_view backend_name(SpatialBackend backend);

}  // namespace hamfrac::cli
