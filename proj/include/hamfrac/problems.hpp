#pragma once

#include <concepts>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "hamfrac/errors.hpp"
#include "hamfrac/exppoly.hpp"
#include "hamfrac/fracseries.hpp"
#include "hamfrac/grid.hpp"
#include "hamfrac/ham_config.hpp"

namespace hamfrac {

enum class ProblemId { Diffusion, GasDynamics, KdV };

/// R_m with its psi-Caputo term removed: R_m = D^{alpha,psi} u_{m-1} + g.
template <SpatialCoefficient F>
struct ResidualPart {
  FracSeries<F> g;
};

/// A benchmark initial-value problem  D^{alpha,psi} u = ...,  u(x, a) = u_0(x).
struct ProblemDef {
  using Reference = std::function<double(double x, double t, const HamConfig& cfg)>;

  ProblemId id;
  std::string name;
  std::string description;
  std::function<double(double)> initial_condition;
  ExpPolyField initial_exact;  // same function, closed form
  Reference reference;         // empty when no reference solution exists
  bool reference_is_exact = false;
  // Default spatial window and probe point.
  double x_min = 0.0;
  double x_max = 1.0;
  double probe_x = 0.0;

  bool has_reference() const { return static_cast<bool>(reference); }
};

const ProblemDef& diffusion_problem();
const ProblemDef& gasdyn_problem();
const ProblemDef& kdv_problem();
std::span<const ProblemDef> all_problems();
/// Lookup by name ("diffusion", "gasdyn", "kdv"); DomainError when unknown.
const ProblemDef& find_problem(std::string_view name);

/// cos(pi x) E_alpha[(1 - pi^2)(psi(t) - psi(a))^alpha]
double diffusion_reference(double x, double t, const HamConfig& cfg);
/// e^{-x} E_alpha[(psi(t) - psi(a))^alpha]
double gasdyn_reference(double x, double t, const HamConfig& cfg);
/// Second-order HAM approximation at hbar = -1 (no closed form is known):
/// sinh^2(x/2) - sinh(x) D^alpha / (4 Gamma(alpha+1)) + cosh(x) D^{2 alpha} / (8 Gamma(2 alpha+1)),
/// with D = psi(t) - psi(a).
double kdv_reference(double x, double t, const HamConfig& cfg);

/// u_0 as a time-independent series in the requested spatial backend.
template <SpatialCoefficient F>
FracSeries<F> initial_series(const ProblemDef& problem, const HamConfig& cfg) {
  if constexpr (std::same_as<F, ExpPolyField>) {
    return {cfg.lattice(), {problem.initial_exact}};
  } else {
    return {cfg.lattice(), {SpatialField::sample(cfg.grid, problem.initial_condition)}};
  }
}

namespace detail {

template <SpatialCoefficient F>
void require_history(std::span<const FracSeries<F>> terms, int m, const char* who) {
  if (terms.empty()) throw DomainError(std::string(who) + ": empty term history");
  if (m < 1 || static_cast<std::size_t>(m) > terms.size()) {
    throw DomainError(std::string(who) + ": step m = " + std::to_string(m) +
                      " needs terms u_0 .. u_{m-1}");
  }
}

/// sum_{i+j=m-1} u_i * op(u_j)
template <SpatialCoefficient F, class Op>
FracSeries<F> convolve(std::span<const FracSeries<F>> terms, int m, Op op, std::size_t k_max) {
  const auto top = static_cast<std::size_t>(m - 1);
  auto acc = FracSeries<F>::zero(terms[0].lattice(), terms[0].coeff(0));
  for (std::size_t i = 0; i <= top; ++i) {
    acc = series_add(acc, series_product(terms[i], op(terms[top - i]), k_max));
  }
  return acc;
}

}  // namespace detail

/// g = -(u_xx + u) evaluated on u_{m-1}.
template <SpatialCoefficient F>
ResidualPart<F> diffusion_g(std::span<const FracSeries<F>> terms, int m,
                            std::size_t /*k_max*/ = kNoTruncation) {
  detail::require_history(terms, m, "diffusion_g");
  const auto& prev = terms[static_cast<std::size_t>(m - 1)];
  return {series_scale(series_add(series_spatial_derivative(prev, 2), prev), -1.0)};
}

/// g = sum u_i (u_j)_x - u_{m-1} + sum u_i u_j, with i + j = m - 1.
template <SpatialCoefficient F>
ResidualPart<F> gasdyn_g(std::span<const FracSeries<F>> terms, int m,
                         std::size_t k_max = kNoTruncation) {
  detail::require_history(terms, m, "gasdyn_g");
  const auto& prev = terms[static_cast<std::size_t>(m - 1)];
  auto advect = detail::convolve(
      terms, m, [](const FracSeries<F>& u) { return series_spatial_derivative(u, 1); }, k_max);
  auto square = detail::convolve(terms, m, [](const FracSeries<F>& u) { return u; }, k_max);
  return {series_add(series_sub(advect, prev), square)};
}

/// g = -d/dx[sum u_i u_j] + d/dx[sum u_i (u_j)_xx], with i + j = m - 1.
template <SpatialCoefficient F>
ResidualPart<F> kdv_g(std::span<const FracSeries<F>> terms, int m,
                      std::size_t k_max = kNoTruncation) {
  detail::require_history(terms, m, "kdv_g");
  auto square = detail::convolve(terms, m, [](const FracSeries<F>& u) { return u; }, k_max);
  auto dispersive = detail::convolve(
      terms, m, [](const FracSeries<F>& u) { return series_spatial_derivative(u, 2); }, k_max);
  return {series_spatial_derivative(series_sub(dispersive, square), 1)};
}

template <SpatialCoefficient F>
ResidualPart<F> residual_g(const ProblemDef& problem, std::span<const FracSeries<F>> terms, int m,
                           std::size_t k_max = kNoTruncation) {
  switch (problem.id) {
    case ProblemId::Diffusion:
      return diffusion_g(terms, m, k_max);
    case ProblemId::GasDynamics:
      return gasdyn_g(terms, m, k_max);
    case ProblemId::KdV:
      return kdv_g(terms, m, k_max);
  }
  throw DomainError("residual_g: unknown problem");
}

}  // namespace hamfrac
