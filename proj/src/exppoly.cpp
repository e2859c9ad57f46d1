#include "hamfrac/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hamfrac/errors.hpp"

namespace hamfrac {

namespace {

using cplx = std::complex<double>;

constexpr cplx kI{0.0, 1.0};

// Rates produced by sums of the same base rates can differ in the last ulp
// depending on summation order.
bool same_rate(cplx lhs, cplx rhs) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) <= 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

bool term_order(const ExpPolyTerm& lhs, const ExpPolyTerm& rhs) {
  if (lhs.power != rhs.power) return lhs.power < rhs.power;
  if (lhs.rate.real() != rhs.rate.real()) return lhs.rate.real() < rhs.rate.real();
  return lhs.rate.imag() < rhs.rate.imag();
}

void check_finite(const ExpPolyTerm& t) {
  if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()) ||
      !std::isfinite(t.rate.real()) || !std::isfinite(t.rate.imag())) {
    throw DomainError("exponential polynomial: non-finite coefficient or rate");
  }
  if (t.power < 0) throw DomainError("exponential polynomial: negative power");
}

}  // namespace

ExpPolyField::ExpPolyField(std::vector<ExpPolyTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) check_finite(t);
  canonicalize();
}

void ExpPolyField::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_order);
  std::vector<ExpPolyTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().power == t.power && same_rate(merged.back().rate, t.rate)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const ExpPolyTerm& t) { return t.coeff == cplx{0.0, 0.0}; });
  terms_ = std::move(merged);
}

ExpPolyField ExpPolyField::constant(double c) { return ExpPolyField({{c, 0, 0.0}}); }

ExpPolyField ExpPolyField::monomial(double c, int power) { return ExpPolyField({{c, power, 0.0}}); }

ExpPolyField ExpPolyField::exponential(double c, double rate) {
  return ExpPolyField({{c, 0, rate}});
}

ExpPolyField ExpPolyField::cos_wave(double c, double wavenumber) {
  return ExpPolyField({{0.5 * c, 0, kI * wavenumber}, {0.5 * c, 0, -kI * wavenumber}});
}

ExpPolyField ExpPolyField::sin_wave(double c, double wavenumber) {
  // sin(kx) = (e^{ikx} - e^{-ikx}) / 2i
  return ExpPolyField({{-0.5 * c * kI, 0, kI * wavenumber}, {0.5 * c * kI, 0, -kI * wavenumber}});
}

ExpPolyField ExpPolyField::sinh_wave(double c, double rate) {
  return ExpPolyField({{0.5 * c, 0, rate}, {-0.5 * c, 0, -rate}});
}

ExpPolyField ExpPolyField::cosh_wave(double c, double rate) {
  return ExpPolyField({{0.5 * c, 0, rate}, {0.5 * c, 0, -rate}});
}

double ExpPolyField::at(double x) const {
  cplx acc{0.0, 0.0};
  for (const auto& t : terms_) {
    acc += t.coeff * std::pow(x, t.power) * std::exp(t.rate * x);
  }
  return acc.real();
}

SpatialField ExpPolyField::sample(const GridSpec& grid) const {
  return SpatialField::sample(grid, [this](double x) { return at(x); });
}

ExpPolyField ExpPolyField::scaled(double s) const {
  if (!std::isfinite(s)) throw DomainError("exponential polynomial: non-finite scale");
  if (s == 0.0) return {};
  ExpPolyField out(*this);
  for (auto& t : out.terms_) t.coeff *= s;
  return out;
}

ExpPolyField ExpPolyField::derivative(int order) const {
  if (order < 0) throw DomainError("derivative order must be nonnegative");
  ExpPolyField out(*this);
  for (int k = 0; k < order; ++k) {
    std::vector<ExpPolyTerm> next;
    next.reserve(2 * out.terms_.size());
    for (const auto& t : out.terms_) {
      // d/dx x^p e^{rx} = p x^{p-1} e^{rx} + r x^p e^{rx}
      if (t.power > 0) next.push_back({t.coeff * static_cast<double>(t.power), t.power - 1, t.rate});
      if (t.rate != cplx{0.0, 0.0}) next.push_back({t.coeff * t.rate, t.power, t.rate});
    }
    out = ExpPolyField(std::move(next));
  }
  return out;
}

ExpPolyField operator+(const ExpPolyField& lhs, const ExpPolyField& rhs) {
  std::vector<ExpPolyTerm> terms(lhs.terms_);
  terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
  return ExpPolyField(std::move(terms));
}

ExpPolyField operator-(const ExpPolyField& lhs, const ExpPolyField& rhs) {
  return lhs + rhs.scaled(-1.0);
}

ExpPolyField operator*(const ExpPolyField& lhs, const ExpPolyField& rhs) {
  std::vector<ExpPolyTerm> terms;
  terms.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      terms.push_back({a.coeff * b.coeff, a.power + b.power, a.rate + b.rate});
    }
  }
  return ExpPolyField(std::move(terms));
}

}  // namespace hamfrac
