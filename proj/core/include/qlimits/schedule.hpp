#pragma once

#include <vector>

namespace qlimits {

// Piecewise-linear function given by knots (x_i, y_i) with strictly
// increasing x. Evaluation outside the knot range clamps to the end values.
class PiecewiseLinear {
 public:
  PiecewiseLinear() : xs_{0.0, 1.0}, ys_{0.0, 0.0} {}
  PiecewiseLinear(std::vector<double> xs, std::vector<double> ys);

  static PiecewiseLinear constant(double c, double x0 = 0.0, double x1 = 1.0);
  // f(s) = 1 - s on [0, 1].
  static PiecewiseLinear ramp_down();
  // g(s) = s on [0, 1].
  static PiecewiseLinear ramp_up();

  double operator()(double x) const;
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  double sup_abs() const;
  bool is_constant() const;

  // Exact value of the integral of e^{r t} |f(t / T)| over [0, T], splitting
  // linear pieces at sign changes.
  double exp_weighted_abs_integral(double r, double T) const;

 private:
  std::vector<double> xs_, ys_;
};

}  // namespace qlimits
