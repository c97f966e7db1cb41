#pragma once

#include <span>
#include <vector>

namespace driftrec {

/// Interpolating cubic spline with natural boundary conditions (zero second
/// derivative at both ends). Evaluation at a knot returns the tabulated value
/// exactly.
class NaturalCubicSpline {
 public:
  NaturalCubicSpline() = default;
  NaturalCubicSpline(std::vector<double> knots, std::vector<double> values);

  double operator()(double x) const;
  double derivative(double x) const;

  std::span<const double> knots() const noexcept { return knots_; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::size_t interval(double x) const;

  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> second_;  // second derivatives at the knots
};

}  // namespace driftrec
