#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hamfrac {

/// Uniform 1-D grid on [x_min, x_max] with n_points nodes.
struct GridSpec {
  static constexpr std::size_t kMinPoints = 8;

  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_points = 101;

  /// Throws DomainError unless x_max > x_min and n_points >= kMinPoints.
  void validate() const;

  double spacing() const { return (x_max - x_min) / static_cast<double>(n_points - 1); }
  double node(std::size_t i) const;
  bool contains(double x) const;

  /// True when node i lies at least `margin` node spacings from either end.
  bool is_interior(std::size_t i, std::size_t margin) const {
    return i >= margin && i + margin < n_points;
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Samples c(x_i) of a spatial coefficient on a uniform grid.
class SpatialField {
 public:
  SpatialField(GridSpec grid, std::vector<double> values);

  static SpatialField sample(const GridSpec& grid, const std::function<double(double)>& f);
  static SpatialField zeros(const GridSpec& grid);
  static SpatialField constant(const GridSpec& grid, double value);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Value at x by 4-point (cubic) Lagrange interpolation; DomainError outside the grid.
  double at(double x) const;

  SpatialField scaled(double s) const;
  SpatialField derivative(int order) const;
  SpatialField zero_like() const { return zeros(grid_); }
  bool is_zero() const;

  friend SpatialField operator+(const SpatialField& lhs, const SpatialField& rhs);
  friend SpatialField operator-(const SpatialField& lhs, const SpatialField& rhs);
  // pointwise
  friend SpatialField operator*(const SpatialField& lhs, const SpatialField& rhs);

  friend bool compatible(const SpatialField& lhs, const SpatialField& rhs) {
    return lhs.grid_ == rhs.grid_;
  }

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/**
 * d/dx (order 1) or d^2/dx^2 (order 2) by fourth-order finite differences:
 * central five-point stencils in the interior, one-sided fourth-order
 * stencils on the two outermost nodes at each end.
 */
SpatialField field_derivative(const SpatialField& f, int order);

}  // namespace hamfrac
