#include "qlimits/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qlimits {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw ValidationError("q must lie in (0, 1)");
}

void require_q_half(double q) {
  if (!(q > 0.0 && q <= 0.5)) throw ValidationError("q must lie in (0, 1/2]");
}

void require_same_shape(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw SizeError("states act on different dimensions");
}

double mass_outside_support(const DensityMatrix& rho, const DensityMatrix& sigma,
                            const Tolerances& tol) {
  ComplexMatrix p = support_projector(sigma.matrix(), tol);
  return std::max(0.0, 1.0 - (p * rho.matrix()).trace().real());
}

double simpson_step(const std::function<double(double)>& g, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = g(lm), frm = g(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double annealer_prefactor(double q) {
  return std::abs(std::sqrt(q / (1.0 - q)) - std::sqrt((1.0 - q) / q));
}

double min_eigenvalue_of(const ComplexMatrix& sigma) {
  require_hermitian(sigma);
  return eigvals_hermitian(sigma)(0);
}

}  // namespace

const char* to_string(LogBase base) { return base == LogBase::nats ? "nats" : "bits"; }

bool DivergenceValue::infinite() const { return std::isinf(value); }

double DivergenceValue::bits() const {
  return base == LogBase::bits ? value : value / std::numbers::ln2;
}

DivergenceValue renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 double alpha, const Tolerances& tol) {
  require_same_shape(rho, sigma);
  if (!(alpha > 0.0) || std::isinf(alpha)) throw ValidationError("alpha must be finite and positive");
  DivergenceValue out{0.0, alpha, LogBase::nats};
  if (alpha >= 1.0 && mass_outside_support(rho, sigma, tol) > tol.support_mass) {
    out.value = kInf;
    return out;
  }
  if (std::abs(alpha - 1.0) < 1e-12) {
    auto log_of = [](double x) { return x > 0.0 ? std::log(x) : 0.0; };
    ComplexMatrix lr = matrix_function(rho.matrix(), log_of, tol);
    ComplexMatrix ls = matrix_function(sigma.matrix(), log_of, tol);
    out.value = (rho.matrix() * (lr - ls)).trace().real();
    return out;
  }
  ComplexMatrix s = matrix_power(sigma.matrix(), (1.0 - alpha) / (2.0 * alpha), tol);
  ComplexMatrix inner = s * rho.matrix() * s;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  RealVector ev = eigvals_hermitian(inner, tol);
  double q = 0.0;
  for (double x : ev)
    if (x > 0.0) q += std::pow(x, alpha);
  if (q <= 0.0) {
    out.value = kInf;
    return out;
  }
  out.value = std::log(q) / (alpha - 1.0);
  return out;
}

DivergenceValue max_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                               const Tolerances& tol) {
  require_same_shape(rho, sigma);
  DivergenceValue out{0.0, kInf, LogBase::nats};
  if (mass_outside_support(rho, sigma, tol) > tol.support_mass) {
    out.value = kInf;
    return out;
  }
  ComplexMatrix s = matrix_power(sigma.matrix(), -0.5, tol);
  ComplexMatrix inner = s * rho.matrix() * s;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  RealVector ev = eigvals_hermitian(inner, tol);
  out.value = std::log(ev(ev.size() - 1));
  return out;
}

namespace {

// z - 2 = sin^2(beta) (1 - 2q)^2 / (q (1 - q)), free of cancellation.
double z_excess(double beta, double q) {
  require_q(q);
  double s = std::sin(beta);
  double b = 1.0 - 2.0 * q;
  return s * s * b * b / (q * (1.0 - q));
}

}  // namespace

double z_mixer(double beta, double q) { return 2.0 + z_excess(beta, q); }

double mixer_layer_dinf(double beta, double q, int n) {
  if (n < 1) throw ValidationError("n must be positive");
  double w = z_excess(beta, q);
  return n * std::log1p((w + std::sqrt(w * (4.0 + w))) / 2.0);
}

double d2_plus_state(double q, int n) {
  require_q(q);
  if (n < 1) throw ValidationError("n must be positive");
  double v = (1.0 / q + 1.0 / (1.0 - q) + 2.0 / std::sqrt(q * (1.0 - q))) / 4.0;
  return n * std::log(v);
}

DecayLedger generic_decay_bound(double d_init, double q_alpha,
                                const std::vector<double>& penalties) {
  if (!(q_alpha >= 0.0 && q_alpha <= 1.0)) throw ValidationError("q_alpha must lie in [0, 1]");
  if (!(d_init >= 0.0)) throw ValidationError("initial divergence must be non-negative");
  DecayLedger ledger;
  ledger.initial = d_init;
  ledger.q_alpha = q_alpha;
  double b = d_init;
  int layer = 0;
  for (double pen : penalties) {
    if (!(pen >= 0.0)) throw ValidationError("penalties must be non-negative");
    b = (1.0 - q_alpha) * b + pen;
    ledger.entries.push_back({++layer, 1.0 - q_alpha, pen, b});
  }
  return ledger;
}

DecayLedger qaoa_entropy_bound(const std::vector<double>& beta, double q, double p_alpha, int n) {
  if (beta.empty()) throw ValidationError("at least one QAOA round is required");
  std::vector<double> penalties;
  for (double b : beta) {
    penalties.push_back(0.0);
    penalties.push_back(mixer_layer_dinf(b, q, n));
  }
  return generic_decay_bound(d2_plus_state(q, n), p_alpha, penalties);
}

double annealer_rate(double q) {
  require_q_half(q);
  return 2.0 * (1.0 - q) / std::log(1.0 / q);
}

double h_of_T(double q, double T) {
  require_q_half(q);
  if (!(T >= 0.0)) throw ValidationError("T must be non-negative");
  double r = annealer_rate(q);
  double d_plus = d2_plus_state(q, 1);
  if (T == 0.0) return d_plus;
  double e = std::exp(-r * T);
  double tail = (1.0 - r * T * e - e) / (r * r * T);
  return e * d_plus + std::abs(1.0 - 2.0 * q) * tail / std::sqrt(q * (1.0 - q));
}

double annealer_entropy_bound(double q, double T, double r_alpha, const PiecewiseLinear& f, int n,
                              std::optional<double> d_init) {
  require_q(q);
  if (!(T >= 0.0)) throw ValidationError("T must be non-negative");
  if (!(r_alpha >= 0.0)) throw ValidationError("rate must be non-negative");
  double d0 = d_init ? *d_init : d2_plus_state(q, n);
  if (T == 0.0) return d0;
  double decay = std::exp(-r_alpha * T);
  return decay * d0 +
         n * annealer_prefactor(q) * decay * f.exp_weighted_abs_integral(r_alpha, T);
}

double annealer_entropy_bound(double q, double T, double r_alpha,
                              const std::function<double(double)>& f, int n,
                              std::optional<double> d_init) {
  require_q(q);
  if (!(T >= 0.0)) throw ValidationError("T must be non-negative");
  if (!(r_alpha >= 0.0)) throw ValidationError("rate must be non-negative");
  double d0 = d_init ? *d_init : d2_plus_state(q, n);
  if (T == 0.0) return d0;
  // Integrate e^{r(t - T)} |f(t/T)| so the integrand stays bounded by sup|f|.
  auto g = [&](double t) { return std::exp(r_alpha * (t - T)) * std::abs(f(t / T)); };
  return std::exp(-r_alpha * T) * d0 + n * annealer_prefactor(q) * adaptive_simpson(g, 0.0, T);
}

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double rel_tol,
                        int max_depth) {
  if (a == b) return 0.0;
  double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  // Scale the tolerance from a coarse composite estimate of the magnitude.
  double scale = 0.0;
  const int probes = 16;
  for (int i = 0; i <= probes; ++i) scale += std::abs(g(a + (b - a) * i / probes));
  scale = std::max(scale / (probes + 1) * std::abs(b - a), std::numeric_limits<double>::min());
  return simpson_step(g, a, b, fa, fm, fb, whole, rel_tol * scale, max_depth);
}

ContractionRate r2_rate(const ComplexMatrix& sigma, double gap) {
  if (!(gap > 0.0)) throw ValidationError("spectral gap must be positive");
  double lmin = min_eigenvalue_of(sigma);
  if (lmin <= default_tolerances().pseudo_inverse_cutoff)
    throw DomainError("fixed point must be full rank");
  double s = 1.0 / lmin;
  if (s <= 1.0) throw DomainError("fixed point must have dimension at least 2");
  ContractionRate rate;
  rate.alpha = 2.0;
  rate.continuous = 2.0 * gap * (1.0 - 1.0 / s) / std::log(s);
  rate.provenance = "rate.continuous.spectral_gap";
  return rate;
}

ContractionRate SdpiResult::rate() const {
  ContractionRate r;
  r.alpha = 2.0;
  r.discrete = 1.0 - discrete_factor;
  r.provenance = "rate.discrete.sdpi";
  return r;
}

double sdpi_norm(const LinearMap& channel, const ComplexMatrix& sigma, double p) {
  if (!(p >= 0.0 && p < 1.0)) throw ValidationError("p must lie in [0, 1)");
  LinearMap composed = [&](const ComplexMatrix& x) {
    ComplexMatrix inv = (x - p * x.trace() * sigma) / (1.0 - p);
    return channel(inv);
  };
  ComplexMatrix m = superoperator_matrix(composed, static_cast<int>(sigma.rows()), &sigma);
  return operator_norm(m);
}

SdpiResult sdpi_max_p(const LinearMap& channel, const ComplexMatrix& sigma) {
  require_hermitian(sigma);
  double lmin = min_eigenvalue_of(sigma);
  if (lmin <= default_tolerances().pseudo_inverse_cutoff)
    throw DomainError("fixed point must be full rank");
  if (std::abs(sigma.trace().real() - 1.0) > default_tolerances().trace)
    throw ValidationError("fixed point must have unit trace");
  if ((channel(sigma) - sigma).norm() > 1e-10)
    throw ValidationError("sigma is not a fixed point of the channel");

  constexpr double feasible_tol = 1e-8;
  auto feasible = [&](double p) { return sdpi_norm(channel, sigma, p) <= 1.0 + feasible_tol; };
  double lo = 0.0, hi = 1.0 - 1e-9;
  SdpiResult res;
  if (!feasible(lo)) {
    lo = 0.0;
  } else if (feasible(hi)) {
    lo = hi;
  } else {
    while (hi - lo > 1e-7) {
      double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
    }
  }
  res.p_star = lo;
  res.norm_at_p = sdpi_norm(channel, sigma, lo);
  res.norm_above = lo + 1e-5 < 1.0 ? sdpi_norm(channel, sigma, lo + 1e-5) : kInf;
  double s = 1.0 / lmin;
  res.discrete_factor = std::pow(1.0 - res.p_star, (s - 1.0) / (s * std::log(s)));
  return res;
}

double purity_bound_from_entropy(double d2_nats, double q, int n) {
  require_q_half(q);
  if (n < 1) throw ValidationError("n must be positive");
  double d2_bits = d2_nats / std::numbers::ln2;
  double exponent = d2_bits - n * (1.0 - std::log2(2.0 * (1.0 - q)));
  return std::min(1.0, std::exp2(exponent));
}

double purity_decay_unital(double rate, int L, int n) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw ValidationError("rate must lie in [0, 1]");
  if (L < 0 || n < 1) throw ValidationError("need L >= 0 and n >= 1");
  return std::exp(-std::numbers::ln2 * (1.0 - std::pow(1.0 - rate, L)) * n);
}

double purity_decay_depolarizing(double p, int L, int n) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  return purity_decay_unital(1.0 - (1.0 - p) * (1.0 - p), L, n);
}

bool moment_ordering_holds(const DensityMatrix& rho, int k) {
  if (k < 2) throw ValidationError("moment order must be at least 2");
  return rho.moment(k) <= rho.purity() + 1e-12;
}

PurityThreshold annealer_purity_threshold(double q, double epsilon,
                                          const std::vector<double>& T_grid) {
  require_q_half(q);
  PurityThreshold out;
  out.threshold_bits = 1.0 - std::log2(2.0 * (1.0 - q)) - epsilon;
  if (out.threshold_bits <= 0.0)
    throw DomainError("purity threshold is not positive; no annealing time reaches it");
  std::vector<double> grid = T_grid;
  if (grid.empty())
    for (int i = 0; i <= 2000; ++i) grid.push_back(0.05 * i);
  double prev = kInf;
  for (double T : grid) {
    double h_bits = h_of_T(q, T) / std::numbers::ln2;
    if (h_bits > prev + 1e-12) out.h_monotone_on_grid = false;
    prev = h_bits;
    if (!out.first_T && h_bits <= out.threshold_bits) out.first_T = T;
  }
  return out;
}

double transfer_inequality_rhs(double d_alpha, double alpha, double sigma_mass) {
  if (!(alpha > 1.0)) throw ValidationError("alpha must exceed 1");
  if (!(sigma_mass > 0.0 && sigma_mass <= 1.0 + 1e-12))
    throw ValidationError("sigma mass must lie in (0, 1]");
  if (std::isinf(d_alpha)) return kInf;
  return std::exp((alpha - 1.0) / alpha * (d_alpha + std::log(sigma_mass)));
}

}  // namespace qlimits
