#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlimits/noise.hpp"
#include "qlimits/quantum.hpp"
#include "qlimits/schedule.hpp"

namespace qlimits {

enum class LogBase { nats, bits };

const char* to_string(LogBase base);

struct DivergenceValue {
  double value = 0.0;  // +inf on support violation
  double alpha = 2.0;  // +inf for the max-divergence
  LogBase base = LogBase::nats;

  bool infinite() const;
  double bits() const;  // value converted from nats
};

// Sandwiched Renyi divergence
// (1/(alpha-1)) log tr[(sigma^{(1-alpha)/2alpha} rho sigma^{(1-alpha)/2alpha})^alpha]
// in nats. +inf when rho puts more than 1e-10 mass outside supp(sigma).
DivergenceValue renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 double alpha, const Tolerances& tol = default_tolerances());

// log || sigma^{-1/2} rho sigma^{-1/2} ||_inf in nats.
DivergenceValue max_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                               const Tolerances& tol = default_tolerances());

// 2 cos(2 beta) + sin^2(beta) / (q (1 - q)); always >= 2.
double z_mixer(double beta, double q);
// n log((z + sqrt(z^2 - 4)) / 2): D_inf of one mixer layer against tau_q^n.
double mixer_layer_dinf(double beta, double q, int n);
// D_2(|+><+|^n || tau_q^n) = n log((1/q + 1/(1-q) + 2/sqrt(q(1-q))) / 4).
double d2_plus_state(double q, int n);

struct DecayEntry {
  int layer = 0;
  double contraction = 1.0;  // factor (1 - q_alpha) applied at this layer
  double penalty = 0.0;
  double bound = 0.0;  // running bound after this layer
};

struct DecayLedger {
  double initial = 0.0;
  double q_alpha = 0.0;
  std::vector<DecayEntry> entries;
  double bound() const { return entries.empty() ? initial : entries.back().bound; }
};

// B_0 = D_init, B_t = (1 - q_alpha) B_{t-1} + penalty_t.
DecayLedger generic_decay_bound(double d_init, double q_alpha, const std::vector<double>& penalties);

// 2P layers: cost layers carry no penalty, mixer layer k carries
// mixer_layer_dinf(beta_k, q, n); D_init = d2_plus_state(q, n).
DecayLedger qaoa_entropy_bound(const std::vector<double>& beta, double q, double p_alpha, int n);

// Per-qubit bound for the linear schedule f(t) = 1 - t with
// r_2 = 2(1-q)/ln(1/q):
// e^{-r T} D_plus(q) + |1-2q| (1 - r T e^{-r T} - e^{-r T}) / (sqrt(q(1-q)) r^2 T).
double h_of_T(double q, double T);
double annealer_rate(double q);  // 2(1-q)/ln(1/q)

// e^{-r T} D_init + n |sqrt(q/(1-q)) - sqrt((1-q)/q)| e^{-r T} int_0^T e^{r t} |f(t/T)| dt.
// The table overload integrates exactly; the callable overload uses adaptive
// Simpson at relative tolerance 1e-10. D_init defaults to d2_plus_state(q, n).
double annealer_entropy_bound(double q, double T, double r_alpha, const PiecewiseLinear& f, int n,
                              std::optional<double> d_init = std::nullopt);
double annealer_entropy_bound(double q, double T, double r_alpha,
                              const std::function<double(double)>& f, int n,
                              std::optional<double> d_init = std::nullopt);

// Adaptive Simpson quadrature of g over [a, b].
double adaptive_simpson(const std::function<double(double)>& g, double a, double b,
                        double rel_tol = 1e-10, int max_depth = 50);

struct ContractionRate {
  double alpha = 2.0;
  double discrete = 0.0;    // per-layer q_alpha, 0 when not applicable
  double continuous = 0.0;  // r_alpha, 0 when not applicable
  std::string provenance;
};

// r_2 = 2 lambda (1 - 1/s) / ln s with s = ||sigma^{-1}||.
ContractionRate r2_rate(const ComplexMatrix& sigma, double gap);

struct SdpiResult {
  double p_star = 0.0;
  double discrete_factor = 1.0;  // (1 - p*)^{(s-1)/(s ln s)}
  double norm_at_p = 0.0;        // certificate at p*
  double norm_above = 0.0;       // norm at p* + 1e-5
  ContractionRate rate() const;
};

// ||Gamma^{-1/2} o N o D_{p,sigma}^{-1} o Gamma^{1/2}||_{2->2} in the
// Hilbert-Schmidt basis.
double sdpi_norm(const LinearMap& channel, const ComplexMatrix& sigma, double p);
// Largest p with sdpi_norm <= 1 + 1e-8, by bisection to 1e-7.
SdpiResult sdpi_max_p(const LinearMap& channel, const ComplexMatrix& sigma);

// 2^{D2_bits - n (1 - log2(2(1-q)))}, clipped at 1; input in nats.
double purity_bound_from_entropy(double d2_nats, double q, int n);
// exp(-ln2 (1 - (1 - rate)^L) n).
double purity_decay_unital(double rate, int L, int n);
// rate = 1 - (1-p)^2.
double purity_decay_depolarizing(double p, int L, int n);
// tr[rho^k] <= tr[rho^2] for k >= 2.
bool moment_ordering_holds(const DensityMatrix& rho, int k);

struct PurityThreshold {
  double threshold_bits = 0.0;  // 1 - log2(2(1-q)) - epsilon
  std::optional<double> first_T;
  bool h_monotone_on_grid = true;
};

// Throws DomainError when the threshold is not positive.
PurityThreshold annealer_purity_threshold(double q, double epsilon,
                                          const std::vector<double>& T_grid = {});

// exp(((alpha-1)/alpha)(D_alpha + ln tr[E sigma])).
double transfer_inequality_rhs(double d_alpha, double alpha, double sigma_mass);

}  // namespace qlimits
