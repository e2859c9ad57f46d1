#include "hamfrac/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace hamfrac {

namespace {

using std::numbers::pi;

double lattice_power(const HamConfig& cfg, double t, double k) {
  const double delta = psi_delta(cfg.psi, cfg.a, t);
  return std::pow(delta, k * cfg.alpha);
}

double ml(double alpha, double z) {
  if (alpha == 1.0) return std::exp(z);
  return mittag_leffler(alpha, z);
}

std::array<ProblemDef, 3> make_problems() {
  ProblemDef diffusion{
      .id = ProblemId::Diffusion,
      .name = "diffusion",
      .description = "linear time-fractional diffusion  D u = u_xx + u,  u(x,a) = cos(pi x)",
      .initial_condition = [](double x) { return std::cos(pi * x); },
      .initial_exact = ExpPolyField::cos_wave(1.0, pi),
      .reference = diffusion_reference,
      .reference_is_exact = true,
      .x_min = 0.0,
      .x_max = 1.0,
      .probe_x = 0.1,
  };
  ProblemDef gasdyn{
      .id = ProblemId::GasDynamics,
      .name = "gasdyn",
      .description = "nonlinear gas dynamics  D u + u u_x - u + u^2 = 0,  u(x,a) = exp(-x)",
      .initial_condition = [](double x) { return std::exp(-x); },
      .initial_exact = ExpPolyField::exponential(1.0, -1.0),
      .reference = gasdyn_reference,
      .reference_is_exact = true,
      .x_min = 0.0,
      .x_max = 2.0,
      .probe_x = 0.2,
  };
  // sinh^2(x/2) = (e^x + e^{-x} - 2) / 4
  ProblemDef kdv{
      .id = ProblemId::KdV,
      .name = "kdv",
      .description = "nonlinear KdV  D u - (u^2)_x + (u u_xx)_x = 0,  u(x,a) = sinh^2(x/2)",
      .initial_condition =
          [](double x) {
            const double s = std::sinh(0.5 * x);
            return s * s;
          },
      .initial_exact = ExpPolyField::cosh_wave(0.5, 1.0) - ExpPolyField::constant(0.5),
      .reference = kdv_reference,
      .reference_is_exact = false,
      .x_min = 0.0,
      .x_max = 2.0,
      .probe_x = 1.0,
  };
  return {std::move(diffusion), std::move(gasdyn), std::move(kdv)};
}

const std::array<ProblemDef, 3>& registry() {
  static const std::array<ProblemDef, 3> problems = make_problems();
  return problems;
}

}  // namespace

const ProblemDef& diffusion_problem() { return registry()[0]; }
const ProblemDef& gasdyn_problem() { return registry()[1]; }
const ProblemDef& kdv_problem() { return registry()[2]; }

std::span<const ProblemDef> all_problems() { return registry(); }

const ProblemDef& find_problem(std::string_view name) {
  for (const auto& p : registry()) {
    if (p.name == name) return p;
  }
  throw DomainError("unknown problem '" + std::string(name) + "' (expected diffusion, gasdyn or kdv)");
}

double diffusion_reference(double x, double t, const HamConfig& cfg) {
  return std::cos(pi * x) * ml(cfg.alpha, (1.0 - pi * pi) * lattice_power(cfg, t, 1.0));
}

double gasdyn_reference(double x, double t, const HamConfig& cfg) {
  return std::exp(-x) * ml(cfg.alpha, lattice_power(cfg, t, 1.0));
}

double kdv_reference(double x, double t, const HamConfig& cfg) {
  const double s = std::sinh(0.5 * x);
  return s * s - std::sinh(x) * lattice_power(cfg, t, 1.0) / (4.0 * gamma(cfg.alpha + 1.0)) +
         std::cosh(x) * lattice_power(cfg, t, 2.0) / (8.0 * gamma(2.0 * cfg.alpha + 1.0));
}

}  // namespace hamfrac
