#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlimits/quantum.hpp"

namespace qlimits {

enum class LipschitzMode { exact_classical, surrogate_quantum, certified_quantum };

const char* to_string(LipschitzMode mode);

struct LipschitzEstimate {
  double value = 0.0;  // max of per_vertex
  LipschitzMode mode = LipschitzMode::exact_classical;
  std::vector<double> per_vertex;
  // Certified mode only: per-vertex lower ends of the bracket.
  std::vector<double> per_vertex_lower;
  double lower() const;
};

// max over v, x of |f(x) - f(x xor e_v)| for f on {0,1}^n in basis order.
LipschitzEstimate lipschitz_classical(const RealVector& f, int n);
// Diagonal observables only; throws ValidationError otherwise.
LipschitzEstimate lipschitz_classical(const Observable& o);

struct CertifyOptions {
  int random_unitaries = 32;
  int bisection_steps = 30;
  int projection_iterations = 300;
  std::uint64_t seed = 7;
};

// Surrogate 2 ||O - I_v (x) tr_v O / d||_inf per vertex. In certified mode
// each vertex gets a bracket: the lower end is max_U ||O - U O U^dag|| over
// single-site unitaries, the upper end is twice the best feasible
// ||O - I_v (x) O'|| found by alternating projections.
LipschitzEstimate lipschitz_quantum_bound(const Observable& o, bool certified = false,
                                          const CertifyOptions& options = {});

// Surrogate derivative at a single vertex.
double lipschitz_surrogate_at(const ComplexMatrix& o, const RegisterShape& shape, int v);

double variance(const DensityMatrix& rho, const Observable& o);
double variance(const DensityMatrix& rho, const ComplexMatrix& o);
// sqrt(tr[H^dag sigma^{1/2} H sigma^{1/2}]).
double kms_norm(const DensityMatrix& sigma, const ComplexMatrix& h);

struct TransportEntry {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  double mass = 0.0;
};

struct ClassicalW1Result {
  double value = 0.0;       // primal optimum
  double dual_value = 0.0;  // sum_x f(x) (mu(x) - nu(x))
  std::vector<TransportEntry> coupling;
  std::vector<double> potential;  // 1-Lipschitz f on every basis index
  double slackness_gap = 0.0;    // max |u_i - w_j - d(x_i, y_j)| over the support
};

// Exact Hamming-metric W1 via a transportation problem between the excess
// supply of mu and the excess demand of nu. Throws SizeError when either
// side has more than 4096 points.
ClassicalW1Result w1_classical(const MeasuredDistribution& mu, const MeasuredDistribution& nu);

struct W1Options {
  int random_orderings = 64;
  bool two_site_witnesses = true;
  std::uint64_t seed = 11;
};

struct W1Result {
  double lower = 0.0;
  double upper = 0.0;
  double gap() const { return upper - lower; }
  std::optional<double> classical_exact;  // W1 of the measured distributions
  std::string lower_witness;
  std::vector<int> best_ordering;
};

// W1(rho, sigma) = (1/2) min sum ||X^(i)||_1 bracketed by witness observables
// and the telescoping decomposition over vertex orderings.
W1Result w1_quantum_bounds(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const W1Options& options = {});

// (1/2) sum_i || Delta_{i-1} - Delta_i ||_1 for the given vertex ordering,
// where Delta_i = I/d^i (x) tr_{first i} Delta.
double telescoping_bound(const ComplexMatrix& delta, const RegisterShape& shape,
                         const std::vector<int>& ordering);

struct SymmetricConcentrationReport {
  int hamming_distance = 0;  // d_H(A, B)
  double mass_a = 0.0;
  double mass_b = 0.0;
  double rhs = 0.0;  // sqrt(C n) (mu(A)^{-1/2} + mu(B)^{-1/2})
  bool passed = false;
};

// Throws DomainError if either set carries zero probability.
SymmetricConcentrationReport symmetric_concentration_check(const MeasuredDistribution& mu,
                                                           const std::vector<std::uint64_t>& a,
                                                           const std::vector<std::uint64_t>& b,
                                                           double poincare_constant);
// Same inequality from precomputed data, for registers too large to enumerate.
SymmetricConcentrationReport symmetric_concentration_bound(int n, int hamming_distance,
                                                           double mass_a, double mass_b,
                                                           double poincare_constant);

// Li_{-k}(z) = sum_{m >= 1} m^k z^m for 0 < z < 1.
double polylog_neg(int k, double z);

}  // namespace qlimits
