#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qlimits/bounds.hpp"
#include "qlimits/circuit.hpp"
#include "qlimits/entropy.hpp"
#include "qlimits/transport.hpp"

using namespace qlimits;

namespace {

InteractionGraphParams chain_params(double b = 1.0) {
  InteractionGraphParams p;
  p.D = 2;
  p.delta = 1;
  p.M = 1.0;
  p.b = b;
  return p;
}

}  // namespace

TEST(TailBound, ClippingAndVacuousFlag) {
  auto big = TailBound::from_raw(3.0);
  EXPECT_DOUBLE_EQ(big.value, 1.0);
  EXPECT_DOUBLE_EQ(big.raw, 3.0);
  EXPECT_TRUE(big.vacuous);
  auto small = TailBound::from_raw(0.2);
  EXPECT_DOUBLE_EQ(small.value, 0.2);
  EXPECT_FALSE(small.vacuous);
}

TEST(Chebyshev, Values) {
  EXPECT_DOUBLE_EQ(chebyshev_tail(4.0, 9, 1.0, 12.0).value, 0.25);
  EXPECT_LT(chebyshev_tail(4.0, 9, 1.0, 1e9).value, 1e-15);
  EXPECT_TRUE(chebyshev_tail(4.0, 9, 1.0, 1.0).vacuous);
  EXPECT_THROW(chebyshev_tail(4.0, 9, 1.0, 0.0), ValidationError);
}

TEST(TransportVariance, Values) {
  EXPECT_DOUBLE_EQ(transport_variance_bound(16.0, 4, 0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(transport_variance_bound(16.0, 4, 0.25, 0.5), 8.0 * 0.75);
}

TEST(TransportVariance, DominatesQuantumW1Lower) {
  Rng rng(181);
  const int n = 3;
  auto arch = random_brickwork(n, 1, rng);
  auto out = simulate_circuit(arch, std::nullopt, basis_state(qubits(n), 0)).final_state;
  ComplexMatrix s = (1 - 1e-6) * out.matrix() + 1e-6 * identity(8) / 8.0;
  DensityMatrix sigma(qubits(n), s);
  double C = poincare_noiseless(arch).value;
  auto rho = random_density_matrix(qubits(n), rng);
  // X = sigma^{-1/2} rho sigma^{-1/2}, so rho = sigma^{1/2} X sigma^{1/2}.
  ComplexMatrix is = matrix_power(s, -0.5);
  ComplexMatrix x1 = is * rho.matrix() * is;
  double kms1 = kms_norm(sigma, x1 - identity(8));
  auto w = w1_quantum_bounds(rho, sigma);
  EXPECT_LE(w.lower, transport_variance_bound(C, n, kms1, 0.0) + 1e-9);
}

TEST(Transfer, Values) {
  GaussianProfile prof;
  EXPECT_LT(transfer_concentration(0.0, 2.0, prof, 100.0, 10, 1.0).value, 1e-300);
  // Exponent negative: larger alpha gives a smaller bound.
  double prev = 2.0;
  for (double a : {1.5, 2.0, 4.0, 16.0}) {
    double v = transfer_concentration(0.3, a, prof, 1.0, 5, 1.0).value;
    EXPECT_LE(v, prev);
    prev = v;
  }
  double expect = std::exp(0.5 * (0.3 - 2.0 * 0.25 * 8 / 4.0 + std::log(2.0)));
  EXPECT_NEAR(transfer_concentration(0.3, 2.0, prof, 0.5, 8, 2.0).value, expect, 1e-15);
}

TEST(Transfer, DominatesExactTailOnProductReference) {
  // Reference sigma = uniform bits; Hoeffding gives a (K = 2, c = 2, l0 = 1)
  // profile for the Hamming weight.
  Rng rng(191);
  const int n = 3;
  auto sigma = maximally_mixed(qubits(n));
  GaussianProfile prof{2.0, 2.0, 1.0};
  for (int trial = 0; trial < 20; ++trial) {
    auto rho = random_density_matrix(qubits(n), rng);
    auto mu = measure_distribution(rho);
    double d2 = renyi_divergence(rho, sigma, 2.0).value;
    for (double a : {0.2, 0.35, 0.5}) {
      double tail = 0.0;
      for (int x = 0; x < (1 << n); ++x)
        if (std::abs(hamming_weight(x) - 1.5) >= a * n) tail += mu.probabilities[x];
      EXPECT_LE(tail, transfer_concentration(d2, 2.0, prof, a, n, 1.0).value + 1e-12);
    }
  }
}

TEST(DepolTail, Values) {
  auto full = depol_tail(1.0, 3, 0.2, 10, 2.0);
  EXPECT_NEAR(full.level, std::sqrt(0.2) * 2.0 * 10, 1e-13);
  EXPECT_NEAR(full.probability.value, std::exp(-1.0), 1e-15);
  double eps = 1.0 / 6.0 - std::pow(0.81, 10);
  auto chain = depol_tail(0.1, 10, eps, 12, 1.0);
  EXPECT_NEAR(chain.level, std::sqrt(1.0 / 6.0) * 12, 1e-12);
  EXPECT_NEAR(chain.probability.value, std::exp(-eps * 6), 1e-15);
}

TEST(AdvantageDepth, Values) {
  auto one = advantage_depth(1.0, 0.3);
  EXPECT_DOUBLE_EQ(one.value, 0.0);
  EXPECT_EQ(one.depth, 1);
  auto e = advantage_depth(std::exp(-1.0), 0.1);
  EXPECT_NEAR(e.value, 5.0, 1e-12);
  EXPECT_EQ(e.depth, static_cast<int>(std::floor(e.value)) + 1);
  EXPECT_EQ(e.exact_check, std::pow(0.9, 2 * e.depth) <= std::exp(-2.0));
  EXPECT_THROW(advantage_depth(0.0, 0.1), ValidationError);
}

TEST(MaxCutDepth, Values) {
  EXPECT_DOUBLE_EQ(maxcut_depth_bounds(576, 5, CircuitKind::local).value, 0.0);
  EXPECT_DOUBLE_EQ(maxcut_depth_bounds(576, 5, CircuitKind::qaoa).value, 0.0);
  EXPECT_DOUBLE_EQ(maxcut_depth_bounds(2304, 5, CircuitKind::local).value, 1.0);
  EXPECT_DOUBLE_EQ(maxcut_qaoa_min_n(55, 1), 1806336.0);
  EXPECT_GE(maxcut_depth_bounds(1806336.0, 55, CircuitKind::qaoa).value, 1.0);
  EXPECT_LT(maxcut_depth_bounds(1806335.0, 55, CircuitKind::qaoa).value, 1.0);
  EXPECT_STREQ(maxcut_depth_bounds(1e4, 5, CircuitKind::local).log_base, "log2");
  for (int P = 1; P <= 4; ++P)
    EXPECT_NEAR(maxcut_depth_bounds(maxcut_qaoa_min_n(7, P), 7, CircuitKind::qaoa).value, P, 1e-12);
}

TEST(MaxCutNoisy, Values) {
  EXPECT_DOUBLE_EQ(maxcut_noisy_max_n(0.1), 805306368.0);
  EXPECT_LT(maxcut_noisy_max_n(0.1), 8.06e8);
  EXPECT_DOUBLE_EQ(maxcut_noisy_max_n(2.0), 1536.0);
  double prev = INFINITY;
  for (double p = 0.05; p < 1.0; p += 0.05) {
    EXPECT_LT(maxcut_noisy_max_n(p), prev);
    prev = maxcut_noisy_max_n(p);
  }
}

TEST(ApproxThreshold, Values) {
  auto d55 = approx_threshold(55);
  EXPECT_NEAR(d55.value, 5.0 / 6 + std::sqrt(54.0) / 165, 1e-15);
  EXPECT_NEAR(d55.value, 0.87787, 1e-5);
  EXPECT_TRUE(d55.below_goemans_williamson);
  EXPECT_FALSE(approx_threshold(54).below_goemans_williamson);
  EXPECT_NEAR(approx_threshold(100000000).value, 5.0 / 6, 1e-4);
}

TEST(TimeBounds, ChainValues) {
  auto p = chain_params();
  double c1 = 64.0 / 3.0 / (std::numbers::e - 1), c0 = 64.0, v = std::numbers::e * 3;
  auto ghz = ghz_time_lower(1e6, p);
  EXPECT_NEAR(ghz.value, std::log(1e6 / (8 * c1) - c0 / c1) / v, 1e-12);
  EXPECT_FALSE(ghz.vacuous);
  auto anneal = anneal_time_lower(1e6, p);
  EXPECT_NEAR(anneal.value, std::log(1e3 / (12 * c1) - c0 / c1) / v, 1e-12);
  EXPECT_TRUE(anneal_time_lower(100, p).vacuous);
  EXPECT_TRUE(ghz_time_lower(100, p).vacuous);
  // Grows like (1/v) ln n.
  double a = ghz_time_lower(1e10, p).value, b = ghz_time_lower(1e12, p).value;
  EXPECT_NEAR((b - a) * v, std::log(100.0), 1e-3);
}

TEST(LiebRobinsonBound, Values) {
  auto p = chain_params(0.5);
  double v = std::numbers::e * 0.5 * 3;
  EXPECT_NEAR(lr_bound(p, 0.4, 3), 2.0 / 3 * std::exp(v * 0.4 - 3), 1e-15);
  EXPECT_THROW(lr_bound(p, 0.4, 0), DomainError);
}

TEST(RegularGraph, Values) {
  const int D = 20;
  auto half = regular_graph_threshold(0.5, D, 100, 0.0);
  EXPECT_NEAR(half.threshold, std::pow(2 / std::numbers::pi, 2) / (2 * D) * 100, 1e-12);
  EXPECT_DOUBLE_EQ(half.mean_energy, 0.0);
  auto r = regular_graph_threshold(0.45, 50, 1000, 0.001);
  double inner = 0.01 * 25 + 2 / std::numbers::pi * std::sqrt(50.0);
  EXPECT_NEAR(r.threshold_density, (inner * inner - 0.001 * 2500) / 5000, 1e-15);
  EXPECT_NEAR(r.classical_energy, -2 / std::numbers::pi * std::sqrt(50.0) * 1000, 1e-9);
  EXPECT_NEAR(r.tail.value, std::exp(-0.5), 1e-15);
}

TEST(RegularGraph, QaoaLedgerCrossesThreshold) {
  std::vector<double> beta(17, 0.02);
  double th = regular_graph_threshold(0.45, 50, 1, 0.0).threshold_density;
  std::optional<double> first;
  for (int i = 1; i <= 99 && !first; ++i) {
    double c = 0.01 * i;
    if (qaoa_entropy_bound(beta, 0.45, c, 1).bound() < th) first = c;
  }
  ASSERT_TRUE(first.has_value());
  EXPECT_GE(qaoa_entropy_bound(beta, 0.45, *first - 0.01, 1).bound(), th);
}

TEST(Mitigation, SingleCopyReducesToTransfer) {
  MitigationInput in;
  in.m = 1;
  in.K = 2;
  in.c = 2;
  in.l0 = 1.5;
  in.r = 0.6;
  in.epsilon = 0.1;
  in.n = 10;
  in.copy_d2 = {0.5};
  auto res = mitigation_concentration(in);
  ASSERT_TRUE(res.applicable);
  GaussianProfile prof{2, 2, 1.5};
  EXPECT_NEAR(res.bound.value, transfer_concentration(0.5, 2.0, prof, 0.6, 10, 1.5).value, 1e-15);
  EXPECT_NEAR(res.deviation, 6.0, 1e-15);
  EXPECT_NEAR(res.stated_value, std::exp(-2 * 0.1 * 10 / 2.25), 1e-15);
}

TEST(Mitigation, MinOfMPreset) {
  auto in = MitigationInput::min_of_m(4, 2.0, 1.0, 0.5, 0.05, 20, {0, 0, 0, 0});
  EXPECT_DOUBLE_EQ(in.K, 4.0);
  EXPECT_DOUBLE_EQ(in.L_f, 1.0);
  auto res = mitigation_concentration(in);
  ASSERT_TRUE(res.applicable);
  EXPECT_NEAR(res.stated_value, std::exp(-2.0 * 0.05 * 20), 1e-15);
  EXPECT_NEAR(res.precondition_rhs, 2.0 * (0.25 - 0.05) * 20, 1e-12);
  EXPECT_LE(res.bound.value, 1.0);
}

TEST(Mitigation, PreconditionViolationNotApplicable) {
  auto in = MitigationInput::min_of_m(2, 2.0, 1.0, 0.3, 0.05, 10, {1.0, 1.0});
  auto res = mitigation_concentration(in);
  EXPECT_FALSE(res.applicable);
  EXPECT_FALSE(res.reason.empty());
  EXPECT_GT(res.precondition_lhs, res.precondition_rhs);
}

TEST(AnnealerTail, UnitalMatchesTransfer) {
  const int n = 12;
  const double T = 3.0, eps = 0.2, lip = 2.0;
  auto t = noisy_annealer_tail(0.5, T, eps, n, lip, 7.0);
  double h = h_of_T(0.5, T);
  double a = lip * std::sqrt((h + eps) / 2);
  EXPECT_NEAR(t.level, 7.0 - a * n, 1e-12);
  GaussianProfile prof{1.0, 2.0, 1.0};
  EXPECT_NEAR(t.probability.value, transfer_concentration(n * h, 2.0, prof, a, n, lip).value, 1e-14);
  EXPECT_NEAR(t.probability.value, std::exp(-eps * n / 2), 1e-14);
}

TEST(AnnealerTail, LongTimeLimit) {
  auto t = noisy_annealer_tail(0.3, 1e7, 0.1, 10, 1.0, 0.0);
  EXPECT_NEAR(t.level, -std::sqrt(0.05) * 10, 1e-5);
}
