#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlimits/poincare.hpp"

namespace qlimits {

inline constexpr double kGoemansWilliamson = 0.878;
inline constexpr double kParisi = 0.763166;

// A probability bound clipped to [0, 1]. `raw` keeps the unclipped value and
// `vacuous` is set whenever the clipped value is 1.
struct TailBound {
  double value = 1.0;
  double raw = 1.0;
  bool vacuous = true;
  static TailBound from_raw(double raw);
};

// min(1, C n ||O||_L^2 / r^2).
TailBound chebyshev_tail(double C, int n, double lipschitz, double r);
TailBound chebyshev_tail(const PoincareConstant& C, int n, double lipschitz, double r);

// sqrt(C n) (||X1 - I||_sigma + ||X2 - I||_sigma).
double transport_variance_bound(double C, int n, double kms1, double kms2);

struct GaussianProfile {
  double K = 2.0;
  double c = 2.0;
  double l0 = 1.0;
  void validate() const;
};

// exp(((alpha-1)/alpha)(D_alpha - c a^2 n / l^2 + ln K)).
TailBound transfer_concentration(double d_alpha, double alpha, const GaussianProfile& profile,
                                 double a, int n, double lipschitz);

struct DeviationTail {
  double level = 0.0;
  TailBound probability;
};

// level ((1-p)^{2L} + eps)^{1/2} ||H||_L n with probability exp(-eps n / 2).
DeviationTail depol_tail(double p, int L, double epsilon, int n, double lipschitz);

struct AdvantageDepth {
  double value = 0.0;  // ln(1/a_c) / (2p)
  int depth = 0;       // smallest integer strictly above value
  bool exact_check = false;  // (1-p)^{2 depth} <= a_c^2
};

AdvantageDepth advantage_depth(double a_c, double p);

enum class CircuitKind { local, qaoa };

struct DepthBound {
  double value = 0.0;
  const char* log_base = "log2";
};

// Local circuits: (1/2) log2(n/576). QAOA: ln(n/576) / (2 ln(D+1)).
DepthBound maxcut_depth_bounds(double n, int D, CircuitKind kind);
// 576 (D+1)^{2P}: smallest n at which the QAOA bound reaches P.
double maxcut_qaoa_min_n(int D, int P);

// 3 2^{2/p + 8}.
double maxcut_noisy_max_n(double p);

struct ApproxThreshold {
  double value = 0.0;  // 5/6 + sqrt(D-1)/(3D)
  bool below_goemans_williamson = false;
};

ApproxThreshold approx_threshold(int D);

struct TimeBound {
  double value = 0.0;
  double log_argument = 0.0;
  bool vacuous = false;  // log argument <= 0
};

// (1/v) ln(sqrt(n)/(12 c1) - c0/c1).
TimeBound anneal_time_lower(double n, const InteractionGraphParams& params);
// (1/v) ln(n/(8 c1) - c0/c1).
TimeBound ghz_time_lower(double n, const InteractionGraphParams& params);

// Lieb-Robinson tail 2M/(2D-1) k0^{delta-1} e^{v t - k0}, k0 = d(A, V \ B).
// Throws DomainError when k0 < 2 delta - 1.
double lr_bound(const InteractionGraphParams& params, double t, int k0);

struct RegularGraphThreshold {
  double threshold = 0.0;          // ((1-2q)^2 D/2 + (2/pi) sqrt D)^2 - eps D^2) / (2 D^2) n
  double threshold_density = 0.0;  // threshold / n
  double mean_energy = 0.0;        // (1-2q)^2 n D / 2
  double classical_energy = 0.0;   // -(2/pi) sqrt(D) n
  TailBound tail;                  // exp(-eps n / 2)
};

RegularGraphThreshold regular_graph_threshold(double q, int D, double n, double epsilon);

struct MitigationInput {
  int m = 1;
  double K = 1.0;         // K(m)
  double L_f = 1.0;
  double l0 = 1.0;
  double c = 2.0;
  double r = 0.0;
  double epsilon = 0.0;
  int n = 1;
  std::vector<double> copy_d2;  // per-copy D_2 in nats

  // Min-of-m estimator: K(m) = m, L_f = 1.
  static MitigationInput min_of_m(int m, double c, double l0, double r, double epsilon, int n,
                                  std::vector<double> copy_d2);
};

struct MitigationResult {
  bool applicable = false;
  std::string reason;
  double precondition_lhs = 0.0;  // sum of per-copy D_2
  double precondition_rhs = 0.0;  // c (r^2 - eps) n / l0^2
  double deviation = 0.0;         // r L_f n
  TailBound bound;         // exp((1/2)(sum D_2 - c r^2 n / l0^2 + ln K)), clipped
  double stated_value = 0.0;  // exp(-c eps n / l0^2)
};

MitigationResult mitigation_concentration(const MitigationInput& in);

struct AnnealerTail {
  double h = 0.0;      // per-qubit entropy bound h(T)
  double level = 0.0;  // mean - 2^{-1/2} (h + eps)^{1/2} ||H||_L n
  TailBound probability;
};

// `mean` is tr[tau_q^n H].
AnnealerTail noisy_annealer_tail(double q, double T, double epsilon, int n, double lipschitz,
                                 double mean);

}  // namespace qlimits
