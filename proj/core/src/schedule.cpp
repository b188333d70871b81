#include "qlimits/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "qlimits/config.hpp"

namespace qlimits {

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size() || xs_.empty())
    throw ValidationError("schedule table needs matching, non-empty knot arrays");
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i]))
      throw ValidationError("schedule table has non-finite entries");
    if (i > 0 && !(xs_[i] > xs_[i - 1])) throw ValidationError("schedule knots must increase");
  }
}

PiecewiseLinear PiecewiseLinear::constant(double c, double x0, double x1) {
  return PiecewiseLinear({x0, x1}, {c, c});
}

PiecewiseLinear PiecewiseLinear::ramp_down() { return PiecewiseLinear({0.0, 1.0}, {1.0, 0.0}); }

PiecewiseLinear PiecewiseLinear::ramp_up() { return PiecewiseLinear({0.0, 1.0}, {0.0, 1.0}); }

double PiecewiseLinear::operator()(double x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  double w = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return (1.0 - w) * ys_[i - 1] + w * ys_[i];
}

double PiecewiseLinear::sup_abs() const {
  double out = 0.0;
  for (double y : ys_) out = std::max(out, std::abs(y));
  return out;
}

bool PiecewiseLinear::is_constant() const {
  return std::all_of(ys_.begin(), ys_.end(), [&](double y) { return y == ys_.front(); });
}

namespace {

// Integral of e^{r t} (a + b t) over [t0, t1].
double exp_linear(double r, double a, double b, double t0, double t1) {
  if (r == 0.0) return a * (t1 - t0) + 0.5 * b * (t1 * t1 - t0 * t0);
  auto prim = [&](double t) { return std::exp(r * t) * ((a + b * t) / r - b / (r * r)); };
  return prim(t1) - prim(t0);
}

}  // namespace

double PiecewiseLinear::exp_weighted_abs_integral(double r, double T) const {
  if (!(T >= 0.0)) throw ValidationError("time horizon must be non-negative");
  if (T == 0.0) return 0.0;
  // Knots in time, including the clamped ends 0 and T.
  std::vector<double> ts{0.0};
  for (double x : xs_)
    if (x > 0.0 && x < 1.0) ts.push_back(x * T);
  ts.push_back(T);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    double t0 = ts[i], t1 = ts[i + 1];
    double y0 = (*this)(t0 / T), y1 = (*this)(t1 / T);
    double b = (y1 - y0) / (t1 - t0);
    double a = y0 - b * t0;
    if (y0 * y1 < 0.0) {
      double tz = -a / b;
      total += std::abs(exp_linear(r, a, b, t0, tz)) + std::abs(exp_linear(r, a, b, tz, t1));
    } else {
      total += std::abs(exp_linear(r, a, b, t0, t1));
    }
  }
  return total;
}

}  // namespace qlimits
