#include "hamfrac/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hamfrac/errors.hpp"

namespace hamfrac {

namespace {

// Weights scaled by 12 (first derivative) / 12 (second derivative).
constexpr std::array<double, 5> kD1Central{1.0, -8.0, 0.0, 8.0, -1.0};
constexpr std::array<double, 5> kD1Edge0{-25.0, 48.0, -36.0, 16.0, -3.0};
constexpr std::array<double, 5> kD1Edge1{-3.0, -10.0, 18.0, -6.0, 1.0};

constexpr std::array<double, 5> kD2Central{-1.0, 16.0, -30.0, 16.0, -1.0};
constexpr std::array<double, 6> kD2Edge0{45.0, -154.0, 214.0, -156.0, 61.0, -10.0};
constexpr std::array<double, 6> kD2Edge1{10.0, -15.0, -4.0, 14.0, -6.0, 1.0};

void require_compatible(const SpatialField& lhs, const SpatialField& rhs) {
  if (!compatible(lhs, rhs)) throw IncompatibleError("spatial fields live on different grids");
}

template <std::size_t N>
double forward(std::span<const double> v, std::size_t start, const std::array<double, N>& w) {
  double acc = 0.0;
  for (std::size_t j = 0; j < N; ++j) acc += w[j] * v[start + j];
  return acc;
}

// Mirror of a forward stencil anchored at the right end: node `end` is the
// boundary, stencil extends leftwards.
template <std::size_t N>
double backward(std::span<const double> v, std::size_t end, const std::array<double, N>& w) {
  double acc = 0.0;
  for (std::size_t j = 0; j < N; ++j) acc += w[j] * v[end - j];
  return acc;
}

}  // namespace

void GridSpec::validate() const {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw DomainError("grid: require finite x_min < x_max");
  }
  if (n_points < kMinPoints) {
    throw DomainError("grid: n_points must be at least " + std::to_string(kMinPoints) +
                      ", got " + std::to_string(n_points));
  }
}

double GridSpec::node(std::size_t i) const {
  if (i + 1 == n_points) return x_max;
  return x_min + static_cast<double>(i) * spacing();
}

bool GridSpec::contains(double x) const {
  const double slack = 1e-12 * (x_max - x_min);
  return x >= x_min - slack && x <= x_max + slack;
}

SpatialField::SpatialField(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.n_points) {
    throw DomainError("spatial field: expected " + std::to_string(grid_.n_points) +
                      " samples, got " + std::to_string(values_.size()));
  }
  if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
    throw DomainError("spatial field: non-finite sample");
  }
}

SpatialField SpatialField::sample(const GridSpec& grid, const std::function<double(double)>& f) {
  grid.validate();
  std::vector<double> v(grid.n_points);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.node(i));
  return {grid, std::move(v)};
}

SpatialField SpatialField::zeros(const GridSpec& grid) {
  grid.validate();
  return {grid, std::vector<double>(grid.n_points, 0.0)};
}

SpatialField SpatialField::constant(const GridSpec& grid, double value) {
  grid.validate();
  return {grid, std::vector<double>(grid.n_points, value)};
}

double SpatialField::at(double x) const {
  if (!grid_.contains(x)) {
    throw DomainError("spatial field: x = " + std::to_string(x) + " outside [" +
                      std::to_string(grid_.x_min) + ", " + std::to_string(grid_.x_max) + "]");
  }
  const double h = grid_.spacing();
  const double s = (x - grid_.x_min) / h;
  const auto n = grid_.n_points;
  // Stencil nodes i0 .. i0+3 surround x wherever possible.
  auto cell = static_cast<std::ptrdiff_t>(std::floor(s));
  auto i0 = std::clamp<std::ptrdiff_t>(cell - 1, 0, static_cast<std::ptrdiff_t>(n) - 4);
  double result = 0.0;
  for (std::ptrdiff_t j = 0; j < 4; ++j) {
    double weight = 1.0;
    for (std::ptrdiff_t k = 0; k < 4; ++k) {
      if (k == j) continue;
      weight *= (s - static_cast<double>(i0 + k)) / static_cast<double>(j - k);
    }
    result += weight * values_[static_cast<std::size_t>(i0 + j)];
  }
  return result;
}

SpatialField SpatialField::scaled(double s) const {
  std::vector<double> v(values_);
  for (auto& x : v) x *= s;
  return {grid_, std::move(v)};
}

SpatialField SpatialField::derivative(int order) const { return field_derivative(*this, order); }

bool SpatialField::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

SpatialField operator+(const SpatialField& lhs, const SpatialField& rhs) {
  require_compatible(lhs, rhs);
  std::vector<double> v(lhs.values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += rhs.values_[i];
  return {lhs.grid_, std::move(v)};
}

SpatialField operator-(const SpatialField& lhs, const SpatialField& rhs) {
  require_compatible(lhs, rhs);
  std::vector<double> v(lhs.values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= rhs.values_[i];
  return {lhs.grid_, std::move(v)};
}

SpatialField operator*(const SpatialField& lhs, const SpatialField& rhs) {
  require_compatible(lhs, rhs);
  std::vector<double> v(lhs.values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= rhs.values_[i];
  return {lhs.grid_, std::move(v)};
}

SpatialField field_derivative(const SpatialField& f, int order) {
  if (order != 1 && order != 2) {
    throw DomainError("field_derivative: order must be 1 or 2, got " + std::to_string(order));
  }
  const auto& grid = f.grid();
  if (grid.n_points < GridSpec::kMinPoints) throw DomainError("field_derivative: grid too small");

  const auto v = f.values();
  const std::size_t n = v.size();
  const double h = grid.spacing();
  std::vector<double> out(n);

  if (order == 1) {
    const double scale = 1.0 / (12.0 * h);
    out[0] = forward(v, 0, kD1Edge0) * scale;
    out[1] = forward(v, 0, kD1Edge1) * scale;
    for (std::size_t i = 2; i + 2 < n; ++i) out[i] = forward(v, i - 2, kD1Central) * scale;
    // Odd derivative: mirrored stencils flip sign.
    out[n - 1] = -backward(v, n - 1, kD1Edge0) * scale;
    out[n - 2] = -backward(v, n - 1, kD1Edge1) * scale;
  } else {
    const double scale = 1.0 / (12.0 * h * h);
    out[0] = forward(v, 0, kD2Edge0) * scale;
    out[1] = forward(v, 0, kD2Edge1) * scale;
    for (std::size_t i = 2; i + 2 < n; ++i) out[i] = forward(v, i - 2, kD2Central) * scale;
    out[n - 1] = backward(v, n - 1, kD2Edge0) * scale;
    out[n - 2] = backward(v, n - 1, kD2Edge1) * scale;
  }
  return {grid, std::move(out)};
}

}  // namespace hamfrac
