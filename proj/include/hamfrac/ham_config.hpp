#pragma once

#include <cstddef>

#include "hamfrac/fracseries.hpp"
#include "hamfrac/grid.hpp"
#include "hamfrac/special.hpp"

namespace hamfrac {

/// Which representation carries the spatial coefficients c_k(x).
enum class SpatialBackend {
  Exact,  // ExpPolyField: closed-form x-dependence, exact derivatives
  Grid,   // SpatialField: samples on the grid, finite differences
};

/// Parameters of one HAM solve. The auxiliary function H(x, t) is fixed to 1.
struct HamConfig {
  double alpha = 0.5;
  PsiFunction psi = PsiFunction::identity();
  double a = 0.0;
  double hbar = -1.0;
  int m_terms = 2;
  GridSpec grid{};

  /// Throws DomainError on alpha outside (0, 1], hbar == 0, m_terms < 0,
  /// a below the psi domain or an invalid grid.
  void validate() const;

  TimeLattice lattice() const { return {alpha, psi, a}; }

  /// Lattice truncation cap for products: each step raises the top index by at most one.
  std::size_t k_max() const { return static_cast<std::size_t>(m_terms) + 2; }
};

}  // namespace hamfrac
