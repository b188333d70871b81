#include "qlimits/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qlimits/entropy.hpp"

namespace qlimits {

namespace {

void require_positive_n(double n) {
  if (!(n >= 1.0)) throw ValidationError("n must be at least 1");
}

TimeBound time_bound(double arg, double v) {
  TimeBound out;
  out.log_argument = arg;
  if (arg <= 0.0) {
    out.vacuous = true;
    return out;
  }
  out.value = std::log(arg) / v;
  return out;
}

}  // namespace

TailBound TailBound::from_raw(double raw) {
  TailBound t;
  t.raw = raw;
  t.value = std::clamp(raw, 0.0, 1.0);
  t.vacuous = t.value >= 1.0;
  return t;
}

TailBound chebyshev_tail(double C, int n, double lipschitz, double r) {
  if (!(r > 0.0)) throw ValidationError("r must be positive");
  if (!(C >= 0.0) || !(lipschitz >= 0.0)) throw ValidationError("C and ||O||_L must be >= 0");
  require_positive_n(n);
  if (std::isinf(r)) return TailBound::from_raw(0.0);
  return TailBound::from_raw(C * n * lipschitz * lipschitz / (r * r));
}

TailBound chebyshev_tail(const PoincareConstant& C, int n, double lipschitz, double r) {
  return chebyshev_tail(C.value, n, lipschitz, r);
}

double transport_variance_bound(double C, int n, double kms1, double kms2) {
  if (!(C >= 0.0 && kms1 >= 0.0 && kms2 >= 0.0)) throw ValidationError("inputs must be >= 0");
  require_positive_n(n);
  return std::sqrt(C * n) * (kms1 + kms2);
}

void GaussianProfile::validate() const {
  if (!(K > 0.0 && c > 0.0 && l0 > 0.0)) throw ValidationError("profile constants must be positive");
}

TailBound transfer_concentration(double d_alpha, double alpha, const GaussianProfile& profile,
                                 double a, int n, double lipschitz) {
  profile.validate();
  if (!(alpha > 1.0)) throw ValidationError("alpha must exceed 1");
  if (!(lipschitz > 0.0)) throw ValidationError("Lipschitz constant must be positive");
  require_positive_n(n);
  if (std::isinf(d_alpha)) return TailBound::from_raw(INFINITY);
  double inner = d_alpha - profile.c * a * a * n / (lipschitz * lipschitz) + std::log(profile.K);
  return TailBound::from_raw(std::exp((alpha - 1.0) / alpha * inner));
}

DeviationTail depol_tail(double p, int L, double epsilon, int n, double lipschitz) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  if (L < 0) throw ValidationError("L must be >= 0");
  require_positive_n(n);
  DeviationTail out;
  out.level = std::sqrt(std::pow(1.0 - p, 2.0 * L) + epsilon) * lipschitz * n;
  out.probability = TailBound::from_raw(std::exp(-epsilon * n / 2.0));
  return out;
}

AdvantageDepth advantage_depth(double a_c, double p) {
  if (!(a_c > 0.0 && a_c <= 1.0)) throw ValidationError("a_c must lie in (0, 1]");
  if (!(p > 0.0 && p < 1.0)) throw ValidationError("p must lie in (0, 1)");
  AdvantageDepth out;
  out.value = std::log(1.0 / a_c) / (2.0 * p);
  out.depth = static_cast<int>(std::floor(out.value)) + 1;
  out.exact_check = std::pow(1.0 - p, 2.0 * out.depth) <= a_c * a_c;
  return out;
}

DepthBound maxcut_depth_bounds(double n, int D, CircuitKind kind) {
  require_positive_n(n);
  if (kind == CircuitKind::local) return {0.5 * std::log2(n / 576.0), "log2"};
  if (D < 3) throw ValidationError("QAOA depth bound needs D >= 3");
  double base = (D + 1.0) * (D + 1.0);
  return {std::log(n / 576.0) / std::log(base), "ln"};
}

double maxcut_qaoa_min_n(int D, int P) {
  if (D < 3 || P < 0) throw ValidationError("need D >= 3 and P >= 0");
  double n = 576.0;
  for (int i = 0; i < 2 * P; ++i) n *= (D + 1.0);
  return n;
}

double maxcut_noisy_max_n(double p) {
  if (!(p > 0.0)) throw ValidationError("p must be positive");
  return 3.0 * std::exp2(2.0 / p + 8.0);
}

ApproxThreshold approx_threshold(int D) {
  if (D < 2) throw ValidationError("D must be at least 2");
  ApproxThreshold out;
  out.value = 5.0 / 6.0 + std::sqrt(D - 1.0) / (3.0 * D);
  out.below_goemans_williamson = out.value < kGoemansWilliamson;
  return out;
}

TimeBound anneal_time_lower(double n, const InteractionGraphParams& params) {
  require_positive_n(n);
  ContinuousConstants c = continuous_constants(params);
  return time_bound(std::sqrt(n) / (12.0 * c.c1) - c.c0 / c.c1, params.velocity());
}

TimeBound ghz_time_lower(double n, const InteractionGraphParams& params) {
  require_positive_n(n);
  ContinuousConstants c = continuous_constants(params);
  return time_bound(n / (8.0 * c.c1) - c.c0 / c.c1, params.velocity());
}

double lr_bound(const InteractionGraphParams& params, double t, int k0) {
  params.validate();
  if (!(t >= 0.0)) throw ValidationError("t must be non-negative");
  if (k0 < 2 * params.delta - 1) throw DomainError("k0 must be at least 2 delta - 1");
  return 2.0 * params.M / (2.0 * params.D - 1.0) * std::pow(static_cast<double>(k0), params.delta - 1) *
         std::exp(params.velocity() * t - k0);
}

RegularGraphThreshold regular_graph_threshold(double q, int D, double n, double epsilon) {
  if (!(q > 0.0 && q < 1.0)) throw ValidationError("q must lie in (0, 1)");
  if (D < 3) throw ValidationError("D must be at least 3");
  if (!(epsilon >= 0.0)) throw ValidationError("epsilon must be >= 0");
  require_positive_n(n);
  const double bias = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
  const double sq = bias * D / 2.0 + 2.0 / std::numbers::pi * std::sqrt(static_cast<double>(D));
  RegularGraphThreshold out;
  out.threshold_density = (sq * sq - epsilon * D * D) / (2.0 * D * D);
  out.threshold = out.threshold_density * n;
  out.mean_energy = bias * n * D / 2.0;
  out.classical_energy = -2.0 / std::numbers::pi * std::sqrt(static_cast<double>(D)) * n;
  out.tail = TailBound::from_raw(std::exp(-epsilon * n / 2.0));
  return out;
}

MitigationInput MitigationInput::min_of_m(int m, double c, double l0, double r, double epsilon,
                                          int n, std::vector<double> copy_d2) {
  MitigationInput in;
  in.m = m;
  in.K = m;
  in.L_f = 1.0;
  in.c = c;
  in.l0 = l0;
  in.r = r;
  in.epsilon = epsilon;
  in.n = n;
  in.copy_d2 = std::move(copy_d2);
  return in;
}

MitigationResult mitigation_concentration(const MitigationInput& in) {
  if (in.m < 1) throw ValidationError("m must be at least 1");
  if (static_cast<int>(in.copy_d2.size()) != in.m)
    throw ValidationError("one D_2 value per copy is required");
  if (!(in.K > 0.0 && in.c > 0.0 && in.l0 > 0.0 && in.L_f > 0.0))
    throw ValidationError("K, c, l0 and L_f must be positive");
  if (!(in.r >= 0.0 && in.epsilon >= 0.0)) throw ValidationError("r and epsilon must be >= 0");
  require_positive_n(in.n);
  MitigationResult out;
  for (double d : in.copy_d2) {
    if (!(d >= 0.0)) throw ValidationError("per-copy D_2 must be >= 0");
    out.precondition_lhs += d;
  }
  const double scale = in.c * in.n / (in.l0 * in.l0);
  out.precondition_rhs = scale * (in.r * in.r - in.epsilon);
  out.deviation = in.r * in.L_f * in.n;
  out.stated_value = std::exp(-scale * in.epsilon);
  if (out.precondition_lhs > out.precondition_rhs) {
    out.reason = "sum of per-copy D_2 exceeds c (r^2 - eps) n / l0^2";
    return out;
  }
  out.applicable = true;
  out.bound = TailBound::from_raw(
      std::exp(0.5 * (out.precondition_lhs - scale * in.r * in.r + std::log(in.K))));
  return out;
}

AnnealerTail noisy_annealer_tail(double q, double T, double epsilon, int n, double lipschitz,
                                 double mean) {
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  if (!(lipschitz >= 0.0)) throw ValidationError("Lipschitz constant must be >= 0");
  require_positive_n(n);
  AnnealerTail out;
  out.h = h_of_T(q, T);
  out.level = mean - std::sqrt(0.5 * (out.h + epsilon)) * lipschitz * n;
  out.probability = TailBound::from_raw(std::exp(-epsilon * n / 2.0));
  return out;
}

}  // namespace qlimits
