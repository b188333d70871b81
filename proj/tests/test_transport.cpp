#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qlimits/circuit.hpp"
#include "qlimits/maxcut.hpp"
#include "qlimits/poincare.hpp"
#include "qlimits/transport.hpp"

using namespace qlimits;

namespace {

RealVector hamming_weights(int n) {
  RealVector f(1 << n);
  for (int x = 0; x < (1 << n); ++x) f(x) = hamming_weight(x);
  return f;
}

MeasuredDistribution random_distribution(const RegisterShape& s, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(s.dim());
  double t = 0;
  for (double& x : p) t += (x = e(rng));
  for (double& x : p) x /= t;
  return make_distribution(s, p);
}

}  // namespace

TEST(Lipschitz, ClassicalKnownValues) {
  EXPECT_DOUBLE_EQ(lipschitz_classical(hamming_weights(5), 5).value, 1.0);
  // K = sum_i Z_i / 2 style operator: traceless with unit Lipschitz constant.
  RealVector k = hamming_weights(4).array() - 2.0;
  EXPECT_NEAR(k.sum(), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(lipschitz_classical(k, 4).value, 1.0);
}

TEST(Lipschitz, NonDiagonalRedirected) {
  EXPECT_THROW(lipschitz_classical(Observable(qubits(1), pauli_x())), ValidationError);
}

TEST(Lipschitz, SurrogateKnownValues) {
  std::vector<int> site{0};
  auto z1 = lipschitz_quantum_bound(Observable(qubits(2), embed(pauli_z(), site, qubits(2))));
  EXPECT_NEAR(z1.per_vertex[0], 2.0, 1e-14);
  EXPECT_NEAR(z1.per_vertex[1], 0.0, 1e-14);
  EXPECT_NEAR(z1.value, 2.0, 1e-14);
  ComplexMatrix sum = ComplexMatrix::Zero(8, 8);
  for (int v = 0; v < 3; ++v) {
    std::vector<int> s{v};
    sum += embed(pauli_z(), s, qubits(3));
  }
  auto zs = Observable(qubits(3), sum);
  EXPECT_NEAR(lipschitz_quantum_bound(zs).value, 2.0, 1e-14);
  EXPECT_NEAR(lipschitz_classical(zs).value, 2.0, 1e-14);
}

TEST(Lipschitz, SurrogateDominatesClassicalProperty) {
  Rng rng(71);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    RealVector d(16);
    for (int i = 0; i < 16; ++i) d(i) = g(rng);
    auto o = Observable::from_diagonal(qubits(4), d);
    EXPECT_GE(lipschitz_quantum_bound(o).value, lipschitz_classical(o).value - 1e-12);
  }
}

TEST(Lipschitz, CertifiedBracketContainsNothingAboveSurrogate) {
  Rng rng(73);
  auto o = Observable(qubits(2), random_hermitian(4, rng));
  auto cert = lipschitz_quantum_bound(o, true);
  auto sur = lipschitz_quantum_bound(o);
  ASSERT_EQ(cert.per_vertex_lower.size(), 2u);
  for (int v = 0; v < 2; ++v) {
    EXPECT_LE(cert.per_vertex_lower[v], cert.per_vertex[v] + 1e-9);
    EXPECT_LE(cert.per_vertex[v], sur.per_vertex[v] + 1e-9);
  }
}

TEST(Variance, KnownValues) {
  EXPECT_NEAR(variance(maximally_mixed(qubits(1)), Observable(qubits(1), identity(2))), 0.0, 1e-15);
  EXPECT_NEAR(variance(maximally_mixed(qubits(1)), Observable(qubits(1), pauli_z())), 1.0, 1e-15);
}

TEST(Variance, KmsBelowVarianceProperty) {
  Rng rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    auto sigma = random_density_matrix(qubits(3), rng);
    ComplexMatrix h = random_hermitian(8, rng);
    double mean = (sigma.matrix() * h).trace().real();
    ComplexMatrix c = h - mean * identity(8);
    double k = kms_norm(sigma, c);
    EXPECT_LE(k * k, variance(sigma, h) + 1e-9);
    EXPECT_GE(variance(sigma, h), 0.0);
  }
}

TEST(Variance, ProductStatePoincareProperty) {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    auto rho = random_product_state(qubits(3), rng);
    auto o = Observable(qubits(3), random_hermitian(8, rng));
    auto lip = lipschitz_quantum_bound(o);
    double sum = 0.0;
    for (double d : lip.per_vertex) sum += d * d;
    EXPECT_LE(variance(rho, o), sum + 1e-9);
    EXPECT_LE(sum, 3 * lip.value * lip.value + 1e-9);
  }
}

TEST(W1Classical, TrivialCases) {
  auto s = qubits(4);
  Rng rng(89);
  auto mu = random_distribution(s, rng);
  EXPECT_NEAR(w1_classical(mu, mu).value, 0.0, 1e-12);
  std::vector<double> a(16, 0.0), b(16, 0.0);
  a[0] = 1.0;
  b[15] = 1.0;
  auto r = w1_classical(make_distribution(s, a), make_distribution(s, b));
  EXPECT_NEAR(r.value, 4.0, 1e-12);
  EXPECT_NEAR(r.dual_value, 4.0, 1e-12);
}

TEST(W1Classical, DualityAndMetricProperty) {
  Rng rng(97);
  auto s = qubits(5);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = random_distribution(s, rng), b = random_distribution(s, rng),
         c = random_distribution(s, rng);
    auto ab = w1_classical(a, b);
    EXPECT_NEAR(ab.value, ab.dual_value, 1e-8);
    EXPECT_LE(ab.slackness_gap, 1e-8);
    for (std::uint64_t x = 0; x < 32; ++x)
      for (int v = 0; v < 5; ++v)
        ASSERT_LE(std::abs(ab.potential[x] - ab.potential[x ^ (1u << v)]), 1.0 + 1e-9);
    EXPECT_NEAR(ab.value, w1_classical(b, a).value, 1e-9);
    EXPECT_LE(w1_classical(a, c).value, ab.value + w1_classical(b, c).value + 1e-9);
    // Independent oracle: the coupling's cost and marginals.
    double cost = 0.0;
    std::vector<double> out(32, 0.0), in(32, 0.0);
    for (const auto& e : ab.coupling) {
      cost += e.mass * hamming_distance(e.from, e.to);
      out[e.from] += e.mass;
      in[e.to] += e.mass;
    }
    EXPECT_NEAR(cost, ab.value, 1e-9);
    for (int x = 0; x < 32; ++x)
      EXPECT_NEAR(out[x] - in[x], a.probabilities[x] - b.probabilities[x], 1e-9);
  }
}

TEST(W1Quantum, EqualStatesAndSingleQubit) {
  Rng rng(101);
  auto rho = random_density_matrix(qubits(2), rng);
  auto same = w1_quantum_bounds(rho, rho);
  EXPECT_NEAR(same.lower, 0.0, 1e-12);
  EXPECT_NEAR(same.upper, 0.0, 1e-12);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_density_matrix(qubits(1), rng), b = random_density_matrix(qubits(1), rng);
    double tn = 0.5 * trace_norm_hermitian(a.matrix() - b.matrix());
    auto r = w1_quantum_bounds(a, b);
    EXPECT_NEAR(r.upper, tn, 1e-9);
    EXPECT_NEAR(r.lower, tn, 1e-9);
  }
}

TEST(W1Quantum, DiagonalStatesDominateClassical) {
  Rng rng(103);
  auto s = qubits(4);
  for (int trial = 0; trial < 3; ++trial) {
    auto mu = random_distribution(s, rng), nu = random_distribution(s, rng);
    RealVector pm = Eigen::Map<const RealVector>(mu.probabilities.data(), 16);
    RealVector pn = Eigen::Map<const RealVector>(nu.probabilities.data(), 16);
    DensityMatrix a(s, pm.cast<Complex>().asDiagonal().toDenseMatrix());
    DensityMatrix b(s, pn.cast<Complex>().asDiagonal().toDenseMatrix());
    auto r = w1_quantum_bounds(a, b);
    EXPECT_GE(r.lower, w1_classical(mu, nu).value - 1e-9);
    EXPECT_LE(r.lower, r.upper + 1e-9);
  }
}

TEST(W1Quantum, LowerBelowUpperProperty) {
  Rng rng(107);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_density_matrix(qubits(3), rng), b = random_density_matrix(qubits(3), rng);
    auto r = w1_quantum_bounds(a, b);
    double tn = trace_norm_hermitian(a.matrix() - b.matrix());
    EXPECT_LE(r.lower, r.upper + 1e-9);
    // Each telescoping term is at most twice ||Delta||_1.
    EXPECT_LE(r.upper, 3 * tn + 1e-9);
    EXPECT_GE(r.lower, 0.0);
  }
}

TEST(Polylog, ClosedForms) {
  double z = std::exp(-1.0);
  EXPECT_NEAR(polylog_neg(0, z), z / (1 - z), 1e-14);
  EXPECT_NEAR(polylog_neg(0, z), 0.581976706869326, 1e-12);
  EXPECT_NEAR(polylog_neg(1, 0.5), 2.0, 1e-13);
  EXPECT_NEAR(polylog_neg(2, 0.3), 0.3 * 1.3 / std::pow(0.7, 3), 1e-12);
  EXPECT_THROW(polylog_neg(1, 1.0), ValidationError);
}

TEST(Concentration, IdenticalSetsPass) {
  auto mu = measure_distribution(maximally_mixed(qubits(3)));
  auto r = symmetric_concentration_check(mu, {1, 2}, {2}, 4.0);
  EXPECT_EQ(r.hamming_distance, 0);
  EXPECT_TRUE(r.passed);
  EXPECT_THROW(symmetric_concentration_check(measure_distribution(basis_state(qubits(3), 0)), {0},
                                             {7}, 4.0),
               DomainError);
}

TEST(Concentration, GhzObstruction) {
  const int n = 6;
  auto mu = measure_distribution(ghz_state(n));
  auto r = symmetric_concentration_check(mu, {0}, {(1u << n) - 1}, 4.0);
  EXPECT_EQ(r.hamming_distance, n);
  EXPECT_DOUBLE_EQ(r.mass_a, 0.5);
  EXPECT_NEAR(r.rhs, std::sqrt(4.0 * n) * 2.0 * std::sqrt(2.0), 1e-12);
  auto big = symmetric_concentration_bound(64, 64, 0.5, 0.5, 4.0);
  EXPECT_FALSE(big.passed);
}

TEST(LightCone, GateLayers) {
  CircuitArchitecture one{qubits(4), {}};
  GateLayer l;
  l.supports = {{0, 1}, {2, 3}};
  l.channels = {{identity(4)}, {identity(4)}};
  one.layers.push_back(l);
  auto t = light_cone(one);
  for (const auto& cone : t.per_vertex) EXPECT_EQ(cone.size(), 2u);
  EXPECT_EQ(t.i_max, 2);
  EXPECT_DOUBLE_EQ(poincare_noiseless(one).value, 16.0);
  Rng rng(109);
  for (int L = 1; L <= 4; ++L) EXPECT_LE(light_cone(random_brickwork(8, L, rng)).i_max, 1 << L);
}

TEST(LightCone, QaoaGrowthMatchesBfs) {
  Graph g = cycle_graph(9);
  for (int P = 1; P <= 3; ++P) {
    QAOAConfig cfg{g, std::vector<double>(P, 0.3), std::vector<double>(P, 0.2)};
    auto t = light_cone(build_qaoa_circuit(cfg));
    EXPECT_LE(t.i_max, static_cast<int>(std::pow(3, P)));
    for (int v = 0; v < 9; ++v) {
      auto d = g.distances_from(v);
      int within = 0;
      for (int x : d) within += (x >= 0 && x <= P);
      EXPECT_EQ(static_cast<int>(t.per_vertex[v].size()), within);
    }
  }
}

TEST(Poincare, NoisyDominatesNoiseless) {
  Rng rng(113);
  auto arch = random_brickwork(8, 2, rng);
  EXPECT_GE(poincare_noisy(arch).value, poincare_noiseless(arch).value);
}

TEST(Poincare, ContinuousConstants) {
  InteractionGraphParams p;
  p.D = 2;
  p.delta = 1;
  p.M = 1.0;
  auto c = continuous_constants(p);
  EXPECT_DOUBLE_EQ(c.c0, 64.0);
  EXPECT_NEAR(c.c1, 64.0 / 3.0 / (std::numbers::e - 1.0), 1e-12);
  EXPECT_NEAR(c.c1, 12.4155, 1e-4);
  EXPECT_NEAR(poincare_continuous_simple(p, 0.0).value, std::pow(64.0 + c.c1, 2), 1e-9);
}

TEST(Poincare, ContinuousExactOnChain) {
  InteractionGraphParams p;
  p.D = 2;
  p.delta = 1;
  p.M = 2.0;
  auto d = distance_table(path_graph(5), 0);
  EXPECT_EQ(d, (std::vector<int>{0, 1, 2, 3, 4}));
  // delta = 1: i0 = 2 (first d(i) >= 1).
  double v = p.velocity(), t = 0.1, sum = 0.0;
  for (int i = 1; i < 5; ++i) sum += std::exp(v * t - d[i]);
  double expect = 4 * std::pow(2.0 * 1 + 4 * 2.0 / 3.0 * sum, 2);
  EXPECT_NEAR(poincare_continuous_exact(p, t, d).value, expect, 1e-9 * expect);
}

TEST(Poincare, ChebyshevTailOnCircuitOutputProperty) {
  Rng rng(127);
  const int n = 5;
  auto arch = random_brickwork(n, 2, rng);
  auto sigma = simulate_circuit(arch, std::nullopt, basis_state(qubits(n), 0)).final_state;
  double C = poincare_noiseless(arch).value;
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    RealVector f(1 << n);
    for (int i = 0; i < (1 << n); ++i) f(i) = g(rng);
    auto o = Observable::from_diagonal(qubits(n), f);
    double lip = lipschitz_classical(o).value;
    double mean = o.expectation(sigma);
    auto mu = measure_distribution(sigma);
    double r = 2.0 * std::sqrt(variance(sigma, o)) + 1e-3;
    double tail = 0.0;
    for (int x = 0; x < (1 << n); ++x)
      if (std::abs(f(x) - mean) >= r) tail += mu.probabilities[x];
    EXPECT_LE(tail, std::min(1.0, C * n * lip * lip / (r * r)) + 1e-12);
  }
}
