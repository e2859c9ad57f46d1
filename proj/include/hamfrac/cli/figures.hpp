#pragma once

#include <string>
#include <vector>

#include "hamfrac/cli/csv.hpp"
#include "hamfrac/cli/run_config.hpp"

namespace hamfrac::cli {

enum class FigureKind { HbarSweep, AlphaTable };

/// Configuration behind one of the standard solution plots (fig1 .. fig9).
struct FigurePreset {
  std::string name;  // fig1 .. fig9
  std::string summary;
  FigureKind kind;
  RunConfig config;
  std::vector<double> values;  // hbar list or alpha list
};

const std::vector<FigurePreset>& figure_presets();
CsvTable run_figure(const FigurePreset& preset);

}  // namespace hamfrac::cli
