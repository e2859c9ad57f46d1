#include "hamfrac/cli/figures.hpp"

#include "hamfrac/cli/commands.hpp"

namespace hamfrac::cli {

namespace {

// "alpha -> 1" is plotted at alpha = 0.999; "n-terms" means M = n - 1.
constexpr double kAlphaNearOne = 0.999;
constexpr std::size_t kSamples = 51;

RunConfig base(const char* problem, const char* psi, double a, double t_max, int m_terms) {
  RunConfig cfg = defaults_for(problem);
  cfg.alpha = kAlphaNearOne;
  cfg.psi = psi;
  cfg.a = a;
  cfg.t_min = a;
  cfg.t_max = t_max;
  cfg.t_samples = kSamples;
  cfg.m_terms = m_terms;
  return cfg;
}

std::vector<FigurePreset> make_presets() {
  using K = FigureKind;
  return {
      {"fig1", "diffusion, 3 terms, psi = t, a = 0, hbar sweep", K::HbarSweep,
       base("diffusion", "identity", 0.0, 0.5, 2), {-1.0, -0.6, -0.8, -1.3}},
      {"fig2", "diffusion reference, psi = t, a = 0, alpha sweep", K::AlphaTable,
       base("diffusion", "identity", 0.0, 0.5, 2), {kAlphaNearOne, 0.9, 0.5}},
      {"fig3", "diffusion, 3 terms, psi = ln t, a = 1, hbar sweep", K::HbarSweep,
       base("diffusion", "log", 1.0, 2.0, 2), {-1.0, -0.7, -1.2}},
      {"fig4", "gas dynamics, 4 terms, psi = t, a = 0, hbar sweep", K::HbarSweep,
       base("gasdyn", "identity", 0.0, 1.0, 3), {-1.0, -0.6, -1.4}},
      {"fig5", "gas dynamics reference, psi = t, a = 0, alpha sweep", K::AlphaTable,
       base("gasdyn", "identity", 0.0, 1.0, 3), {kAlphaNearOne, 0.75, 0.4}},
      {"fig6", "gas dynamics, 4 terms, psi = ln t, a = 1, hbar sweep", K::HbarSweep,
       base("gasdyn", "log", 1.0, 2.0, 3), {-1.0, -2.0, -0.5}},
      {"fig7", "KdV, 3 terms, psi = t, a = 0, hbar sweep", K::HbarSweep,
       base("kdv", "identity", 0.0, 1.0, 2), {-1.0, -2.0, -0.8}},
      {"fig8", "KdV second-order approximation, psi = t, a = 0, alpha sweep", K::AlphaTable,
       base("kdv", "identity", 0.0, 1.0, 2), {kAlphaNearOne, 0.8, 0.6}},
      {"fig9", "KdV second-order approximation, psi = ln t, a = 1, alpha sweep", K::AlphaTable,
       base("kdv", "log", 1.0, 2.0, 2), {kAlphaNearOne, 0.7, 0.6}},
  };
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = make_presets();
  return presets;
}

CsvTable run_figure(const FigurePreset& preset) {
  if (preset.kind == FigureKind::HbarSweep) return cmd_hsweep(preset.config, preset.values);
  return cmd_alpha_table(preset.config, preset.values);
}

}  // namespace hamfrac::cli
