#pragma once

#include <complex>
#include <vector>

#include "hamfrac/grid.hpp"

namespace hamfrac {

/// coeff * x^power * exp(rate * x)
struct ExpPolyTerm {
  std::complex<double> coeff;
  int power = 0;
  std::complex<double> rate;
};

/**
 * Real-valued exponential polynomial  c(x) = Re sum_j c_j x^{p_j} e^{r_j x}.
 *
 * Sums, products and x-derivatives stay inside this class and are computed
 * exactly, so repeated spatial differentiation inside the deformation
 * recurrence carries no discretisation error. cos, sin, exp, sinh, cosh and
 * polynomials are all representable. Terms are kept merged (equal power and
 * rate) and sorted, so equal fields built along different routes compare
 * term-by-term.
 */
class ExpPolyField {
 public:
  ExpPolyField() = default;
  explicit ExpPolyField(std::vector<ExpPolyTerm> terms);

  static ExpPolyField constant(double c);
  static ExpPolyField monomial(double c, int power);
  static ExpPolyField exponential(double c, double rate);
  static ExpPolyField cos_wave(double c, double wavenumber);
  static ExpPolyField sin_wave(double c, double wavenumber);
  static ExpPolyField sinh_wave(double c, double rate);
  static ExpPolyField cosh_wave(double c, double rate);

  const std::vector<ExpPolyTerm>& terms() const noexcept { return terms_; }

  double at(double x) const;
  double operator()(double x) const { return at(x); }
  SpatialField sample(const GridSpec& grid) const;

  ExpPolyField scaled(double s) const;
  ExpPolyField derivative(int order) const;
  ExpPolyField zero_like() const { return {}; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend ExpPolyField operator+(const ExpPolyField& lhs, const ExpPolyField& rhs);
  friend ExpPolyField operator-(const ExpPolyField& lhs, const ExpPolyField& rhs);
  friend ExpPolyField operator*(const ExpPolyField& lhs, const ExpPolyField& rhs);

  friend bool compatible(const ExpPolyField&, const ExpPolyField&) { return true; }

 private:
  void canonicalize();

  std::vector<ExpPolyTerm> terms_;
};

}  // namespace hamfrac
