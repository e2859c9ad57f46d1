#include "hamfrac/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hamfrac/exppoly.hpp"
#include "hamfrac/grid.hpp"
#include "hamfrac/ham.hpp"

namespace hamfrac::cli {

namespace {

template <SpatialCoefficient F>
std::vector<double> curve_impl(const ProblemDef& problem, const HamConfig& cfg, double x,
                               std::span<const double> ts) {
  const auto sum = assemble(run_ham<F>(problem, cfg));
  std::vector<double> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back(series_eval(sum, x, t));
  return out;
}

std::optional<double> abs_diff(double value, const std::optional<double>& ref) {
  if (!ref) return std::nullopt;
  return std::abs(value - *ref);
}

std::vector<std::optional<double>> reference_curve(const ProblemDef& problem, const HamConfig& cfg,
                                                   double x, std::span<const double> ts) {
  std::vector<std::optional<double>> out(ts.size());
  if (!problem.has_reference()) return out;
  for (std::size_t i = 0; i < ts.size(); ++i) out[i] = problem.reference(x, ts[i], cfg);
  return out;
}

}  // namespace

std::vector<double> ham_curve(const ProblemDef& problem, const HamConfig& cfg,
                              SpatialBackend backend, double x, std::span<const double> ts) {
  if (backend == SpatialBackend::Exact) return curve_impl<ExpPolyField>(problem, cfg, x, ts);
  return curve_impl<SpatialField>(problem, cfg, x, ts);
}

CsvTable cmd_solve(const RunConfig& cfg) {
  validate(cfg);
  const auto& problem = find_problem(cfg.problem);
  const HamConfig ham = to_ham_config(cfg);
  const auto ts = time_samples(cfg);
  const auto values = ham_curve(problem, ham, cfg.spatial, cfg.probe_x, ts);
  const auto refs = reference_curve(problem, ham, cfg.probe_x, ts);

  CsvTable table({"t", "ham_value", "reference_value", "abs_error"});
  for (std::size_t i = 0; i < ts.size(); ++i) {
    table.add_row({ts[i], values[i], refs[i], abs_diff(values[i], refs[i])});
  }
  return table;
}

CsvTable cmd_hsweep(const RunConfig& cfg, std::span<const double> hbars) {
  validate(cfg);
  for (double h : hbars) {
    if (!std::isfinite(h) || h == 0.0) throw ConfigError("hbar values must be finite and nonzero");
  }
  const auto& problem = find_problem(cfg.problem);
  const HamConfig base = to_ham_config(cfg);
  const auto ts = time_samples(cfg);

  // Independent solves; results are collected in input order.
  std::vector<std::future<std::vector<double>>> pending;
  pending.reserve(hbars.size());
  for (double h : hbars) {
    HamConfig ham = base;
    ham.hbar = h;
    pending.push_back(std::async(std::launch::async, [&problem, ham, &cfg, &ts] {
      return ham_curve(problem, ham, cfg.spatial, cfg.probe_x, ts);
    }));
  }
  std::vector<std::vector<double>> curves;
  curves.reserve(pending.size());
  for (auto& f : pending) curves.push_back(f.get());

  const auto refs = reference_curve(problem, base, cfg.probe_x, ts);

  std::vector<std::string> header{"t", "reference_value"};
  for (double h : hbars) {
    header.push_back("ham_hbar=" + format_real(h));
    header.push_back("abs_error_hbar=" + format_real(h));
  }
  CsvTable table(std::move(header));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CsvTable::Row row{ts[i], refs[i]};
    for (const auto& curve : curves) {
      row.emplace_back(curve[i]);
      row.push_back(abs_diff(curve[i], refs[i]));
    }
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable cmd_alpha_table(const RunConfig& cfg, std::span<const double> alphas) {
  validate(cfg);
  const auto& problem = find_problem(cfg.problem);
  if (!problem.has_reference()) {
    throw ConfigError("problem '" + problem.name + "' has no reference solution");
  }
  std::vector<HamConfig> configs;
  for (double alpha : alphas) {
    HamConfig ham = to_ham_config(cfg);
    ham.alpha = alpha;
    try {
      ham.validate();
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    configs.push_back(std::move(ham));
  }

  std::vector<std::string> header{"t"};
  for (double alpha : alphas) header.push_back("reference_alpha=" + format_real(alpha));
  CsvTable table(std::move(header));
  if (alphas.empty()) return table;

  for (double t : time_samples(cfg)) {
    CsvTable::Row row{t};
    for (const auto& ham : configs) row.emplace_back(problem.reference(cfg.probe_x, t, ham));
    table.add_row(std::move(row));
  }
  return table;
}

std::string cmd_list(bool json) {
  std::ostringstream out;
  for (const auto& p : all_problems()) {
    const char* reference = !p.has_reference()        ? "none"
                            : p.reference_is_exact    ? "exact"
                                                      : "second-order approximation";
    if (json) {
      nlohmann::ordered_json record{
          {"name", p.name},
          {"description", p.description},
          {"psi", {"identity", "log"}},
          {"reference", reference},
          {"x_min", p.x_min},
          {"x_max", p.x_max},
          {"probe_x", p.probe_x},
      };
      out << record.dump() << '\n';
    } else {
      out << p.name << "\t" << p.description << "\t[psi: identity, log; reference: " << reference
          << "]\n";
    }
  }
  return out.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot open '" + tmp.string() + "' for writing");
    f << content;
    if (!f.flush()) throw ConfigError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ConfigError("cannot move output into place at '" + path + "'");
  }
}

}  // namespace hamfrac::cli
