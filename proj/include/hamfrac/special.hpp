#pragma once

#include <functional>
#include <string>

namespace hamfrac {

/// Gamma function for positive finite arguments.
double gamma(double z);

/// Gamma(num) / Gamma(den), stable past the overflow point of Gamma itself.
double gamma_ratio(double num, double den);

struct MLParams {
  int max_terms = 200;
  double tail_tol = 1e-14;
};

/**
 * One-parameter Mittag-Leffler function
 *
 *     E_alpha(z) = sum_{m>=0} z^m / Gamma(m alpha + 1)
 *
 * summed until the last added term satisfies |term| <= tail_tol.
 * Throws TruncationError when max_terms is exhausted first.
 *
 * For z < 0 and alpha < 1 the series alternates; once a term exceeds 10 the
 * sum would lose too many digits to cancellation, and the value is taken from
 * the integral representation over the spectral density instead.
 */
double mittag_leffler(double alpha, double z, const MLParams& params = {});

enum class PsiKind { Identity, Logarithm, Custom };

/// Strictly increasing time warp psi(t) with its derivative.
class PsiFunction {
 public:
  using Map = std::function<double(double)>;

  static PsiFunction identity();
  static PsiFunction logarithm();
  static PsiFunction custom(std::string name, Map eval, Map deriv, double domain_min);

  /// "identity" or "log"/"logarithm".
  static PsiFunction from_name(const std::string& name);

  PsiKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  double domain_min() const noexcept { return domain_min_; }

  double operator()(double t) const;
  double derivative(double t) const;

  // Custom warps compare by name.
  friend bool operator==(const PsiFunction& lhs, const PsiFunction& rhs) {
    return lhs.kind_ == rhs.kind_ && lhs.name_ == rhs.name_;
  }

 private:
  PsiFunction(PsiKind kind, std::string name, Map eval, Map deriv, double domain_min);

  PsiKind kind_;
  std::string name_;
  Map eval_;
  Map deriv_;
  double domain_min_;
};

/// psi(t) - psi(a) for t >= a >= psi.domain_min().
double psi_delta(const PsiFunction& psi, double a, double t);

}  // namespace hamfrac
