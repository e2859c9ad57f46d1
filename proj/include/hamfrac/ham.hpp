#pragma once

#include <cmath>
#include <cstddef>
#include <future>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamfrac/errors.hpp"
#include "hamfrac/fracseries.hpp"
#include "hamfrac/ham_config.hpp"
#include "hamfrac/problems.hpp"

namespace hamfrac {

/// chi_m: 0 for m == 1, 1 for m >= 2.
int chi_switch(int m);

/// Terms u_0 .. u_m computed so far for one problem.
template <SpatialCoefficient F>
struct DeformationState {
  std::vector<FracSeries<F>> terms;
  const ProblemDef* problem = nullptr;
};

struct Probe {
  double x = 0.0;
  double t = 0.0;
};

/**
 * m-th order deformation step with H(x, t) = 1:
 *
 *     u_m = (chi_m + hbar) [u_{m-1} - u_{m-1}(x, a)] + hbar I^{alpha,psi}[g_{m-1}]
 *
 * The psi-Caputo part of R_m never has to be evaluated: I^{alpha,psi} applied
 * to D^{alpha,psi} u_{m-1} gives u_{m-1} - u_{m-1}(x, a) (0 < alpha <= 1),
 * which is folded into the first bracket. The problem supplies only g.
 */
template <SpatialCoefficient F>
FracSeries<F> deformation_step(const DeformationState<F>& state, const HamConfig& cfg, int m) {
  if (state.problem == nullptr) throw DomainError("deformation_step: state has no problem");
  if (m < 1 || static_cast<std::size_t>(m) > state.terms.size()) {
    throw DomainError("deformation_step: m = " + std::to_string(m) + " needs u_0 .. u_{m-1}");
  }
  const std::span<const FracSeries<F>> history(state.terms.data(), static_cast<std::size_t>(m));
  const auto& prev = history.back();
  const double weight = chi_switch(m) + cfg.hbar;

  auto g = residual_g(*state.problem, history, m, cfg.k_max()).g;
  return series_add(series_scale(drop_leading(prev), weight),
                    series_scale(frac_integral(g), cfg.hbar));
}

/// u_0 .. u_M for the given problem.
template <SpatialCoefficient F>
DeformationState<F> run_ham(const ProblemDef& problem, const HamConfig& cfg) {
  cfg.validate();
  DeformationState<F> state{{initial_series<F>(problem, cfg)}, &problem};
  state.terms.reserve(static_cast<std::size_t>(cfg.m_terms) + 1);
  for (int m = 1; m <= cfg.m_terms; ++m) {
    state.terms.push_back(deformation_step(state, cfg, m));
  }
  return state;
}

/// u_0 + ... + u_upto
template <SpatialCoefficient F>
FracSeries<F> assemble(const DeformationState<F>& state, int upto) {
  if (upto < 0 || static_cast<std::size_t>(upto) >= state.terms.size()) {
    throw DomainError("assemble: upto = " + std::to_string(upto) + " but only " +
                      std::to_string(state.terms.size()) + " terms computed");
  }
  auto sum = state.terms.front();
  for (int m = 1; m <= upto; ++m) sum = series_add(sum, state.terms[static_cast<std::size_t>(m)]);
  return sum;
}

template <SpatialCoefficient F>
FracSeries<F> assemble(const DeformationState<F>& state) {
  return assemble(state, static_cast<int>(state.terms.size()) - 1);
}

struct SweepRow {
  double hbar = 0.0;
  double value = 0.0;
  std::optional<double> reference;
  std::optional<double> abs_error;
};

inline void validate_probe(const HamConfig& cfg, Probe probe) {
  if (!cfg.grid.contains(probe.x)) {
    throw DomainError("probe x = " + std::to_string(probe.x) + " outside the grid");
  }
  if (!(probe.t >= cfg.a)) {
    throw DomainError("probe t = " + std::to_string(probe.t) + " precedes a = " +
                      std::to_string(cfg.a));
  }
}

/**
 * M-th partial sum at `probe` for each hbar. Rows are solved concurrently and
 * returned in the order of `hbar_values`.
 */
template <SpatialCoefficient F>
std::vector<SweepRow> hbar_sweep(const ProblemDef& problem, const HamConfig& cfg,
                                 std::span<const double> hbar_values, Probe probe) {
  validate_probe(cfg, probe);
  for (double h : hbar_values) {
    if (!std::isfinite(h) || h == 0.0) throw DomainError("hbar_sweep: hbar must be nonzero");
  }

  std::vector<std::future<SweepRow>> pending;
  pending.reserve(hbar_values.size());
  for (double h : hbar_values) {
    pending.push_back(std::async(std::launch::async, [&problem, cfg, h, probe] {
      HamConfig row_cfg = cfg;
      row_cfg.hbar = h;
      const auto state = run_ham<F>(problem, row_cfg);
      SweepRow row{h, series_eval(assemble(state), probe.x, probe.t), std::nullopt, std::nullopt};
      if (problem.has_reference()) {
        row.reference = problem.reference(probe.x, probe.t, row_cfg);
        row.abs_error = std::abs(row.value - *row.reference);
      }
      return row;
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

/// |u_{m+1}(probe)| / |u_m(probe)| for successive m; zero denominators are skipped.
template <SpatialCoefficient F>
std::vector<double> term_ratio_diagnostic(const DeformationState<F>& state, Probe probe) {
  std::vector<double> values;
  values.reserve(state.terms.size());
  for (const auto& term : state.terms) values.push_back(std::abs(series_eval(term, probe.x, probe.t)));

  std::vector<double> ratios;
  for (std::size_t m = 0; m + 1 < values.size(); ++m) {
    if (values[m] == 0.0) continue;
    ratios.push_back(values[m + 1] / values[m]);
  }
  return ratios;
}

}  // namespace hamfrac
