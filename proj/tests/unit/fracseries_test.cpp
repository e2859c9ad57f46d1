#include "hamfrac/fracseries.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hamfrac/exppoly.hpp"
#include "hamfrac/grid.hpp"

namespace hamfrac {
namespace {

using std::numbers::pi;
using ExactSeries = FracSeries<ExpPolyField>;
using GridSeries = FracSeries<SpatialField>;

TimeLattice lattice(double alpha, PsiFunction psi = PsiFunction::identity(), double a = 0.0) {
  return {alpha, std::move(psi), a};
}

ExactSeries exact_series(double alpha, std::vector<ExpPolyField> coeffs) {
  return {lattice(alpha), std::move(coeffs)};
}

const ExpPolyField kCos = ExpPolyField::cos_wave(1.0, pi);

GridSeries random_grid_series(std::mt19937_64& rng, const GridSpec& g, std::size_t len, double alpha) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<SpatialField> coeffs;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<double> v(g.n_points);
    for (auto& x : v) x = u(rng);
    coeffs.emplace_back(g, std::move(v));
  }
  return {lattice(alpha), std::move(coeffs)};
}

double max_field_diff(const SpatialField& a, const SpatialField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void expect_series_near(const GridSeries& p, const GridSeries& q, double tol) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t k = 0; k < n; ++k) {
    EXPECT_LE(max_field_diff(p.coeff_or_zero(k), q.coeff_or_zero(k)), tol) << "slot " << k;
  }
}

void expect_field_near(const ExpPolyField& f, double (*g)(double), double lo, double hi, double tol) {
  for (double x = lo; x <= hi; x += (hi - lo) / 40.0) EXPECT_NEAR(f.at(x), g(x), tol) << "x = " << x;
}

TEST(SeriesAdd, IdentityAndCoefficientwiseSum) {
  const auto p = exact_series(0.5, {kCos, ExpPolyField::constant(2.0)});
  const auto zero = ExactSeries::zero(lattice(0.5), kCos);
  const auto s = series_add(p, zero);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s.coeff(1).at(0.3), 2.0, 0.0);

  const auto one = exact_series(0.5, {ExpPolyField::constant(1.0)});
  const auto two = exact_series(0.5, {ExpPolyField::constant(2.0)});
  EXPECT_DOUBLE_EQ(series_add(one, two).coeff(0).at(0.7), 3.0);
}

TEST(SeriesAdd, DiffusionFirstTwoTerms) {
  const double alpha = 0.7;
  const double hbar = -0.6;
  const auto u0 = exact_series(alpha, {kCos});
  // u_1 = hbar I[-(u0'' + u0)]
  const auto u1 = series_scale(
      frac_integral(series_scale(series_add(series_spatial_derivative(u0, 2), u0), -1.0)), hbar);
  const auto sum = series_add(u0, u1);
  ASSERT_EQ(sum.size(), 2u);
  for (double x = 0.0; x <= 1.0; x += 0.1) {
    EXPECT_NEAR(sum.coeff(0).at(x), std::cos(pi * x), 1e-15);
    EXPECT_NEAR(sum.coeff(1).at(x), -hbar * (1 - pi * pi) * std::cos(pi * x) / std::tgamma(alpha + 1),
                1e-13);
  }
}

TEST(SeriesAdd, RejectsIncompatibleOperands) {
  const auto p = exact_series(0.5, {kCos});
  EXPECT_THROW(series_add(p, exact_series(0.6, {kCos})), IncompatibleError);
  EXPECT_THROW(series_add(p, ExactSeries(lattice(0.5, PsiFunction::logarithm(), 1.0), {kCos})),
               IncompatibleError);
  EXPECT_THROW(series_add(p, ExactSeries(lattice(0.5, PsiFunction::identity(), 0.5), {kCos})),
               IncompatibleError);
  const GridSeries g1(lattice(0.5), {SpatialField::constant({0, 1, 11}, 1.0)});
  const GridSeries g2(lattice(0.5), {SpatialField::constant({0, 1, 21}, 1.0)});
  EXPECT_THROW(series_add(g1, g2), IncompatibleError);
  EXPECT_THROW(series_product(g1, g2), IncompatibleError);
}

TEST(SeriesScale, ByOneZeroAndFactor) {
  const auto p = exact_series(0.5, {kCos, ExpPolyField::exponential(1.0, -1.0)});
  EXPECT_DOUBLE_EQ(series_scale(p, 1.0).coeff(1).at(0.4), p.coeff(1).at(0.4));
  EXPECT_TRUE(series_scale(p, 0.0).is_zero());

  // (1 + hbar) u_1 is the first summand of the diffusion u_2.
  const double alpha = 0.5;
  const double hbar = -0.8;
  const auto u1 = exact_series(alpha, {ExpPolyField{}, kCos.scaled(-hbar * (1 - pi * pi) / std::tgamma(alpha + 1))});
  const auto s = series_scale(u1, 1 + hbar);
  EXPECT_NEAR(s.coeff(1).at(0.2),
              -(1 + hbar) * hbar * (1 - pi * pi) * std::cos(0.2 * pi) / std::tgamma(alpha + 1), 1e-14);
  EXPECT_THROW(series_scale(p, INFINITY), DomainError);
}

TEST(SeriesProduct, IdentityAndLatticeShift) {
  const auto p = exact_series(0.5, {kCos, ExpPolyField::exponential(2.0, 0.5)});
  const auto one = exact_series(0.5, {ExpPolyField::constant(1.0)});
  const auto prod = series_product(p, one);
  ASSERT_EQ(prod.size(), 2u);
  EXPECT_NEAR(prod.coeff(1).at(0.3), p.coeff(1).at(0.3), 1e-15);

  const auto c1 = exact_series(0.5, {ExpPolyField{}, ExpPolyField::exponential(1.0, 1.0)});
  const auto c1c1 = series_product(c1, c1);
  EXPECT_EQ(c1c1.max_index(), 2u);
  EXPECT_TRUE(c1c1.coeff(0).is_zero());
  EXPECT_TRUE(c1c1.coeff(1).is_zero());
  EXPECT_NEAR(c1c1.coeff(2).at(0.3), std::exp(0.6), 1e-14);
}

TEST(SeriesProduct, GasDynamicsInitialSquareOnGrid) {
  const GridSpec g{0.0, 2.0, 201};
  const GridSeries u0(lattice(0.5), {SpatialField::sample(g, [](double x) { return std::exp(-x); })});
  const auto sq = series_product(u0, u0);
  for (std::size_t i = 0; i < g.n_points; ++i) {
    EXPECT_NEAR(sq.coeff(0)[i], std::exp(-2.0 * g.node(i)), 1e-15);
  }
}

TEST(SeriesProduct, TruncatesAtKMax) {
  const auto p = exact_series(0.5, {ExpPolyField::constant(1.0), ExpPolyField::constant(1.0),
                                    ExpPolyField::constant(1.0)});
  EXPECT_EQ(series_product(p, p).size(), 5u);
  EXPECT_EQ(series_product(p, p, 2).size(), 3u);
  EXPECT_DOUBLE_EQ(series_product(p, p, 2).coeff(2).at(0.0), 3.0);
}

TEST(SeriesProduct, CommutativeAndAssociative) {
  std::mt19937_64 rng(11);
  const GridSpec g{0.0, 1.0, 16};
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = random_grid_series(rng, g, 1 + trial % 4, 0.4);
    const auto q = random_grid_series(rng, g, 1 + (trial / 2) % 4, 0.4);
    const auto r = random_grid_series(rng, g, 1 + (trial / 3) % 3, 0.4);
    expect_series_near(series_product(p, q), series_product(q, p), 1e-12);
    expect_series_near(series_product(series_product(p, q), r),
                       series_product(p, series_product(q, r)), 1e-12);
  }
}

TEST(SpatialDerivative, CosineCurvatureBothBackends) {
  const auto exact = series_spatial_derivative(exact_series(0.5, {kCos}), 2);
  expect_field_near(exact.coeff(0), [](double x) { return -pi * pi * std::cos(pi * x); }, 0.0, 1.0, 1e-13);

  const GridSpec g{0.0, 1.0, 401};
  const GridSeries gs(lattice(0.5), {SpatialField::sample(g, [](double x) { return std::cos(pi * x); })});
  const auto d = series_spatial_derivative(gs, 2);
  for (std::size_t i = 0; i < g.n_points; ++i) {
    EXPECT_NEAR(d.coeff(0)[i], -pi * pi * std::cos(pi * g.node(i)), 1e-7);
  }
}

TEST(SpatialDerivative, ZeroAndHalfSinh) {
  EXPECT_TRUE(series_spatial_derivative(ExactSeries::zero(lattice(0.5), kCos), 1).is_zero());
  const auto s2 = exact_series(0.5, {ExpPolyField::cosh_wave(0.5, 1.0) - ExpPolyField::constant(0.5)});
  expect_field_near(series_spatial_derivative(s2, 1).coeff(0),
                    [](double x) { return 0.5 * std::sinh(x); }, 0.0, 2.0, 1e-15);
}

TEST(FracIntegral, PowerRuleOnConstant) {
  const auto one = exact_series(0.5, {ExpPolyField::constant(1.0)});
  const auto i1 = frac_integral(one);
  ASSERT_EQ(i1.size(), 2u);
  EXPECT_TRUE(i1.coeff(0).is_zero());
  EXPECT_NEAR(i1.coeff(1).at(0.0), 1.1283791670955126, 1e-15);
  EXPECT_NEAR(i1.coeff(1).at(0.0), 1.0 / gamma(1.5), 1e-15);
}

TEST(FracIntegral, ZeroAndCosine) {
  EXPECT_TRUE(frac_integral(ExactSeries::zero(lattice(0.3), kCos)).is_zero());
  const double alpha = 0.35;
  const auto ic = frac_integral(exact_series(alpha, {kCos}));
  EXPECT_NEAR(ic.coeff(1).at(0.2), std::cos(0.2 * pi) / std::tgamma(alpha + 1), 1e-15);
}

TEST(FracIntegral, SemigroupAtLatticeGranularity) {
  for (double alpha : {0.2, 0.5, 0.9}) {
    const auto twice = frac_integral(frac_integral(exact_series(alpha, {ExpPolyField::constant(1.0)})));
    ASSERT_EQ(twice.size(), 3u);
    EXPECT_TRUE(twice.coeff(1).is_zero());
    EXPECT_NEAR(twice.coeff(2).at(0.0), gamma(1.0) / gamma(2 * alpha + 1), 1e-14);
  }
}

TEST(FracIntegral, InvertsFormalCaputoDerivativeUpToInitialValue) {
  std::mt19937_64 rng(5);
  const GridSpec g{0.0, 1.0, 12};
  for (double alpha : {0.25, 0.5, 0.75, 0.999}) {
    for (std::size_t len : {1u, 2u, 5u}) {
      const auto u = random_grid_series(rng, g, len, alpha);
      const auto back = frac_integral(caputo_lattice_derivative(u));
      expect_series_near(back, drop_leading(u), 1e-12);
    }
  }
}

TEST(SeriesEval, ValueAtLowerTerminalIsLeadingCoefficient) {
  std::mt19937_64 rng(3);
  const GridSpec g{0.0, 1.0, 21};
  std::uniform_int_distribution<std::size_t> node(0, g.n_points - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_grid_series(rng, g, 1 + trial % 5, 0.3 + 0.006 * trial);
    const std::size_t i = node(rng);
    EXPECT_NEAR(series_eval(u, g.node(i), 0.0), u.coeff(0)[i], 1e-14);
  }
}

TEST(SeriesEval, DiffusionTwoTermValue) {
  // u_0 + u_1 at hbar = -1, alpha = 0.5, x = 0, t = 1: 1 + (1 - pi^2) / Gamma(1.5)
  const auto s = exact_series(0.5, {kCos, kCos.scaled((1 - pi * pi) / std::tgamma(1.5))});
  EXPECT_NEAR(series_eval(s, 0.0, 1.0), -9.0082768265679031, 1e-13);
}

TEST(SeriesEval, ZeroSeriesAndDomainErrors) {
  const GridSeries z = GridSeries::zero(lattice(0.5), SpatialField::constant({0, 1, 11}, 0.0));
  EXPECT_EQ(series_eval(z, 0.37, 2.0), 0.0);
  EXPECT_THROW(series_eval(z, 1.5, 2.0), DomainError);
  EXPECT_THROW(series_eval(z, 0.5, -1.0), DomainError);
}

TEST(SeriesEval, LogarithmicWarp) {
  const ExactSeries s(lattice(0.5, PsiFunction::logarithm(), 1.0),
                      {ExpPolyField::constant(1.0), ExpPolyField::constant(2.0)});
  EXPECT_NEAR(series_eval(s, 0.0, std::exp(4.0)), 1.0 + 2.0 * 2.0, 1e-13);
}

}  // namespace
}  // namespace hamfrac
