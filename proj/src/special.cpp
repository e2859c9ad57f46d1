#include "hamfrac/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hamfrac/errors.hpp"

namespace hamfrac {

namespace {

// tgamma overflows just past 171.6.
constexpr double kDirectGammaLimit = 170.0;

double ml_term(double alpha, double z, int m) {
  if (m == 0) return 1.0;
  if (z == 0.0) return 0.0;
  const double g_arg = m * alpha + 1.0;
  if (g_arg < kDirectGammaLimit) {
    const double p = std::pow(z, m);
    if (std::isfinite(p)) return p / std::tgamma(g_arg);
  }
  const double mag = std::exp(m * std::log(std::abs(z)) - std::lgamma(g_arg));
  return (z < 0.0 && m % 2 == 1) ? -mag : mag;
}

// Above this term size the alternating series has lost more than about one
// digit to cancellation.
constexpr double kCancellationLimit = 10.0;

/**
 * E_alpha(-x) for x > 0, 0 < alpha < 1, from the spectral representation
 *
 *     E_alpha(-x) = int_0^inf exp(-r x^{1/alpha}) K_alpha(r) dr,
 *     K_alpha(r) = sin(alpha pi) / pi * r^{alpha-1} / (r^{2 alpha} + 2 r^alpha cos(alpha pi) + 1).
 *
 * K_alpha peaks at r = 1 as alpha -> 1, so the range is split there and both
 * halves use endpoint-clustering quadrature.
 */
double ml_negative_real(double alpha, double x) {
  using std::numbers::pi;
  const double s = std::sin(alpha * pi) / pi;
  const double c = std::cos(alpha * pi);
  const double rate = std::pow(x, 1.0 / alpha);
  auto kernel = [=](double r) {
    if (r <= 0.0) return 0.0;
    const double ra = std::pow(r, alpha);
    const double val = std::exp(-r * rate) * s * (ra / r) / (ra * ra + 2.0 * ra * c + 1.0);
    return std::isfinite(val) ? val : 0.0;
  };
  boost::math::quadrature::tanh_sinh<double> inner;
  boost::math::quadrature::exp_sinh<double> outer;
  constexpr double tol = 1e-15;
  const double head = inner.integrate(kernel, 0.0, 1.0, tol);
  const double tail = outer.integrate([&](double u) { return kernel(1.0 + u); }, 0.0,
                                      std::numeric_limits<double>::infinity(), tol);
  return head + tail;
}

}  // namespace

double gamma(double z) {
  if (!std::isfinite(z) || z <= 0.0) {
    throw DomainError("gamma: argument must be positive and finite, got " + std::to_string(z));
  }
  const double g = std::tgamma(z);
  if (!std::isfinite(g)) {
    throw DomainError("gamma: overflow at z = " + std::to_string(z));
  }
  return g;
}

double gamma_ratio(double num, double den) {
  if (!std::isfinite(num) || !std::isfinite(den) || num <= 0.0 || den <= 0.0) {
    throw DomainError("gamma_ratio: arguments must be positive and finite");
  }
  if (num < kDirectGammaLimit && den < kDirectGammaLimit) {
    return std::tgamma(num) / std::tgamma(den);
  }
  return std::exp(std::lgamma(num) - std::lgamma(den));
}

double mittag_leffler(double alpha, double z, const MLParams& params) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("mittag_leffler: alpha must be positive");
  }
  if (!std::isfinite(z)) {
    throw DomainError("mittag_leffler: argument must be finite");
  }
  if (params.max_terms < 1 || !(params.tail_tol >= 0.0)) {
    throw DomainError("mittag_leffler: max_terms >= 1 and tail_tol >= 0 required");
  }

  const bool integral_ok = z < 0.0 && alpha < 1.0;
  double sum = 1.0;
  double term = 1.0;
  double largest = 1.0;
  for (int m = 1; m < params.max_terms; ++m) {
    term = ml_term(alpha, z, m);
    sum += term;
    largest = std::max(largest, std::abs(term));
    if (integral_ok && largest > kCancellationLimit) return ml_negative_real(alpha, -z);
    if (std::abs(term) <= params.tail_tol) return sum;
  }
  throw TruncationError("mittag_leffler: no convergence within " +
                            std::to_string(params.max_terms) + " terms (alpha = " +
                            std::to_string(alpha) + ", z = " + std::to_string(z) + ")",
                        std::abs(term));
}

PsiFunction::PsiFunction(PsiKind kind, std::string name, Map eval, Map deriv, double domain_min)
    : kind_(kind),
      name_(std::move(name)),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)),
      domain_min_(domain_min) {}

PsiFunction PsiFunction::identity() {
  return {PsiKind::Identity, "identity", [](double t) { return t; },
          [](double) { return 1.0; }, 0.0};
}

PsiFunction PsiFunction::logarithm() {
  return {PsiKind::Logarithm, "log", [](double t) { return std::log(t); },
          [](double t) { return 1.0 / t; }, std::numeric_limits<double>::min()};
}

PsiFunction PsiFunction::custom(std::string name, Map eval, Map deriv, double domain_min) {
  if (!eval || !deriv) throw DomainError("custom psi requires both eval and deriv");
  if (!std::isfinite(domain_min)) throw DomainError("custom psi requires a finite domain_min");
  return {PsiKind::Custom, std::move(name), std::move(eval), std::move(deriv), domain_min};
}

PsiFunction PsiFunction::from_name(const std::string& name) {
  if (name == "identity") return identity();
  if (name == "log" || name == "logarithm") return logarithm();
  throw DomainError("unknown psi function '" + name + "' (expected identity or log)");
}

double PsiFunction::operator()(double t) const {
  if (!(t >= domain_min_)) {
    throw DomainError("psi '" + name_ + "': t = " + std::to_string(t) + " below domain");
  }
  return eval_(t);
}

double PsiFunction::derivative(double t) const {
  if (!(t >= domain_min_)) {
    throw DomainError("psi '" + name_ + "': t = " + std::to_string(t) + " below domain");
  }
  return deriv_(t);
}

double psi_delta(const PsiFunction& psi, double a, double t) {
  if (!std::isfinite(a) || !std::isfinite(t)) throw DomainError("psi_delta: non-finite input");
  if (a < psi.domain_min()) {
    throw DomainError("psi_delta: lower terminal a = " + std::to_string(a) +
                      " below the domain of psi '" + psi.name() + "'");
  }
  if (t < a) {
    throw DomainError("psi_delta: t = " + std::to_string(t) + " precedes a = " +
                      std::to_string(a));
  }
  if (t == a) return 0.0;
  return psi(t) - psi(a);
}

}  // namespace hamfrac
