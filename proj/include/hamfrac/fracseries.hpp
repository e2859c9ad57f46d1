#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamfrac/errors.hpp"
#include "hamfrac/special.hpp"

namespace hamfrac {

/// Spatial coefficient fields a FracSeries can carry (SpatialField, ExpPolyField).
template <class F>
concept SpatialCoefficient =
    std::copyable<F> && requires(const F& f, const F& g, double s, double x, int order) {
      { f + g } -> std::same_as<F>;
      { f - g } -> std::same_as<F>;
      { f * g } -> std::same_as<F>;
      { f.scaled(s) } -> std::same_as<F>;
      { f.derivative(order) } -> std::same_as<F>;
      { f.zero_like() } -> std::same_as<F>;
      { f.is_zero() } -> std::convertible_to<bool>;
      { f.at(x) } -> std::convertible_to<double>;
      { compatible(f, g) } -> std::convertible_to<bool>;
    };

/// Time structure shared by every term: exponents k*alpha of (psi(t) - psi(a)).
struct TimeLattice {
  double alpha = 0.5;
  PsiFunction psi = PsiFunction::identity();
  double a = 0.0;

  void validate() const {
    if (!std::isfinite(alpha) || alpha <= 0.0) throw DomainError("lattice: alpha must be positive");
    if (!std::isfinite(a) || a < psi.domain_min()) {
      throw DomainError("lattice: lower terminal a = " + std::to_string(a) +
                        " outside the domain of psi '" + psi.name() + "'");
    }
  }

  friend bool operator==(const TimeLattice&, const TimeLattice&) = default;
};

inline constexpr std::size_t kNoTruncation = std::numeric_limits<std::size_t>::max();

/**
 * Finite fractional power series
 *
 *     u(x, t) = sum_k c_k(x) (psi(t) - psi(a))^{k alpha},   k = 0 .. size()-1.
 *
 * Always holds at least the k = 0 slot. Values are immutable; every
 * operation below returns a new series.
 */
template <SpatialCoefficient F>
class FracSeries {
 public:
  FracSeries(TimeLattice lattice, std::vector<F> coeffs)
      : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
    lattice_.validate();
    if (coeffs_.empty()) throw DomainError("fractional series needs at least one coefficient");
    for (const auto& c : coeffs_) {
      if (!compatible(c, coeffs_.front())) {
        throw IncompatibleError("fractional series coefficients live on different grids");
      }
    }
  }

  static FracSeries zero(TimeLattice lattice, const F& like) {
    return FracSeries(std::move(lattice), std::vector<F>{like.zero_like()});
  }

  const TimeLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const F> coeffs() const noexcept { return coeffs_; }
  const F& coeff(std::size_t k) const { return coeffs_.at(k); }

  F coeff_or_zero(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : coeffs_.front().zero_like();
  }

  /// Highest lattice index with a nonzero field (0 for the zero series).
  std::size_t max_index() const {
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
      if (!coeffs_[k].is_zero()) return k;
    }
    return 0;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

 private:
  TimeLattice lattice_;
  std::vector<F> coeffs_;
};

template <SpatialCoefficient F>
void require_compatible(const FracSeries<F>& p, const FracSeries<F>& q) {
  if (!(p.lattice() == q.lattice())) {
    throw IncompatibleError("fractional series differ in alpha, psi or lower terminal");
  }
  if (!compatible(p.coeff(0), q.coeff(0))) {
    throw IncompatibleError("fractional series live on different grids");
  }
}

template <SpatialCoefficient F>
FracSeries<F> series_add(const FracSeries<F>& p, const FracSeries<F>& q) {
  require_compatible(p, q);
  const std::size_t n = std::max(p.size(), q.size());
  std::vector<F> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k >= q.size()) {
      out.push_back(p.coeff(k));
    } else if (k >= p.size()) {
      out.push_back(q.coeff(k));
    } else {
      out.push_back(p.coeff(k) + q.coeff(k));
    }
  }
  return {p.lattice(), std::move(out)};
}

template <SpatialCoefficient F>
FracSeries<F> series_scale(const FracSeries<F>& p, double s) {
  if (!std::isfinite(s)) throw DomainError("series_scale: non-finite factor");
  std::vector<F> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(c.scaled(s));
  return {p.lattice(), std::move(out)};
}

template <SpatialCoefficient F>
FracSeries<F> series_sub(const FracSeries<F>& p, const FracSeries<F>& q) {
  return series_add(p, series_scale(q, -1.0));
}

/// Cauchy product on the exponent lattice, truncated at index k_max.
template <SpatialCoefficient F>
FracSeries<F> series_product(const FracSeries<F>& p, const FracSeries<F>& q,
                             std::size_t k_max = kNoTruncation) {
  require_compatible(p, q);
  std::size_t n = p.size() + q.size() - 1;
  if (k_max != kNoTruncation) n = std::min(n, k_max + 1);
  std::vector<F> out(n, p.coeff(0).zero_like());
  for (std::size_t i = 0; i < p.size() && i < n; ++i) {
    if (p.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < q.size() && i + j < n; ++j) {
      if (q.coeff(j).is_zero()) continue;
      out[i + j] = out[i + j] + p.coeff(i) * q.coeff(j);
    }
  }
  return {p.lattice(), std::move(out)};
}

/// x-derivatives commute with powers of (psi(t) - psi(a)): applied per coefficient.
template <SpatialCoefficient F>
FracSeries<F> series_spatial_derivative(const FracSeries<F>& p, int order) {
  std::vector<F> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(c.derivative(order));
  return {p.lattice(), std::move(out)};
}

/**
 * Left psi-fractional integral of order alpha by the power rule:
 *
 *     c_k (psi(t)-psi(a))^{k alpha}
 *       -> c_k Gamma(k alpha + 1) / Gamma((k+1) alpha + 1) (psi(t)-psi(a))^{(k+1) alpha}
 *
 * The result vanishes at t = a.
 */
template <SpatialCoefficient F>
FracSeries<F> frac_integral(const FracSeries<F>& p) {
  const double alpha = p.lattice().alpha;
  std::vector<F> out;
  out.reserve(p.size() + 1);
  out.push_back(p.coeff(0).zero_like());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double delta = static_cast<double>(k) * alpha + 1.0;
    out.push_back(p.coeff(k).scaled(gamma_ratio(delta, delta + alpha)));
  }
  return {p.lattice(), std::move(out)};
}

/**
 * Formal psi-Caputo derivative of order alpha on the lattice (index shift
 * down, k = 0 term annihilated). Only used to cross-check the recurrence;
 * the solver itself never differentiates in time.
 */
template <SpatialCoefficient F>
FracSeries<F> caputo_lattice_derivative(const FracSeries<F>& p) {
  const double alpha = p.lattice().alpha;
  std::vector<F> out;
  out.reserve(std::max<std::size_t>(p.size() - 1, 1));
  for (std::size_t k = 1; k < p.size(); ++k) {
    const double delta = static_cast<double>(k) * alpha + 1.0;
    out.push_back(p.coeff(k).scaled(gamma_ratio(delta, delta - alpha)));
  }
  if (out.empty()) out.push_back(p.coeff(0).zero_like());
  return {p.lattice(), std::move(out)};
}

/// The k = 0 term alone: u(x, a) as a time-independent series.
template <SpatialCoefficient F>
FracSeries<F> leading_part(const FracSeries<F>& p) {
  return {p.lattice(), std::vector<F>{p.coeff(0)}};
}

/// u(x, t) - u(x, a): the series with its k = 0 slot set to zero.
template <SpatialCoefficient F>
FracSeries<F> drop_leading(const FracSeries<F>& p) {
  std::vector<F> out(p.coeffs().begin(), p.coeffs().end());
  out.front() = out.front().zero_like();
  return {p.lattice(), std::move(out)};
}

template <SpatialCoefficient F>
double series_eval(const FracSeries<F>& p, double x, double t) {
  const auto& lat = p.lattice();
  const double delta = psi_delta(lat.psi, lat.a, t);
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& c = p.coeff(k);
    // k = 0 is always evaluated so that an out-of-range x is reported.
    if (k > 0 && c.is_zero()) continue;
    sum += c.at(x) * std::pow(delta, static_cast<double>(k) * lat.alpha);
  }
  return sum;
}

template <SpatialCoefficient F>
FracSeries<F> operator+(const FracSeries<F>& p, const FracSeries<F>& q) {
  return series_add(p, q);
}

template <SpatialCoefficient F>
FracSeries<F> operator-(const FracSeries<F>& p, const FracSeries<F>& q) {
  return series_sub(p, q);
}

}  // namespace hamfrac
