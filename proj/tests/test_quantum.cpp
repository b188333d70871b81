#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qlimits/bounds.hpp"
#include "qlimits/circuit.hpp"
#include "qlimits/entropy.hpp"
#include "qlimits/lieb_robinson.hpp"
#include "qlimits/lindblad.hpp"
#include "qlimits/maxcut.hpp"
#include "qlimits/noise.hpp"
#include "qlimits/quantum.hpp"

using namespace qlimits;

namespace {

double d2_uniform(const DensityMatrix& rho) {
  return std::log(static_cast<double>(rho.dim()) * rho.purity());
}

ComplexMatrix expm_i(const ComplexMatrix& h, double t) {
  return expm_hermitian(h, Complex(0.0, t));
}

}  // namespace

TEST(States, ProductTau) {
  auto half = product_state_tau(0.5, 1);
  EXPECT_LE((half.matrix() - 0.5 * identity(2)).norm(), 1e-15);
  EXPECT_THROW(product_state_tau(1.0, 1), ValidationError);
  EXPECT_THROW(product_state_tau(0.0, 2), ValidationError);
  auto t = product_state_tau(0.3, 2).matrix();
  const double expect[] = {0.09, 0.21, 0.21, 0.49};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(t(i, i).real(), expect[i], 1e-15);
  EXPECT_LE((t - ComplexMatrix(t.diagonal().asDiagonal())).norm(), 0.0);
  std::vector<int> keep{1};
  EXPECT_LE((product_state_tau(0.3, 3).marginal(keep).matrix() - tau_matrix(0.3)).norm(), 1e-15);
}

TEST(States, ValidationRejectsBadMatrices) {
  ComplexMatrix m = identity(2);
  EXPECT_THROW(DensityMatrix(qubits(1), m), ValidationError);  // trace 2
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(qubits(1), neg), ValidationError);
}

TEST(States, MomentsAndPurity) {
  auto mixed = maximally_mixed(qubits(3));
  EXPECT_NEAR(mixed.purity(), 1.0 / 8, 1e-15);
  EXPECT_NEAR(mixed.moment(3), 1.0 / 64, 1e-15);
  EXPECT_NEAR(ghz_state(3).purity(), 1.0, 1e-14);
}

TEST(Measure, TextbookDistributions) {
  auto zero = measure_distribution(basis_state(qubits(3), 0));
  EXPECT_DOUBLE_EQ(zero.probability(0), 1.0);
  auto unif = measure_distribution(maximally_mixed(qubits(3)));
  for (double p : unif.probabilities) EXPECT_NEAR(p, 1.0 / 8, 1e-15);
  auto ghz = measure_distribution(ghz_state(4));
  EXPECT_NEAR(ghz.probability(0), 0.5, 1e-15);
  EXPECT_NEAR(ghz.probability(15), 0.5, 1e-15);
  EXPECT_EQ(ghz.bitstring(15), "1111");
}

TEST(Measure, CommutesWithDiagonalUnitariesProperty) {
  Rng rng(31);
  Graph g = cycle_graph(4);
  auto h = maxcut_hamiltonian(g);
  for (int trial = 0; trial < 10; ++trial) {
    auto rho = random_density_matrix(qubits(4), rng);
    double gamma = std::uniform_real_distribution<double>(0, 6)(rng);
    ComplexMatrix u = expm_i(h.matrix(), gamma);
    auto out = DensityMatrix::trusted(qubits(4), u * rho.matrix() * u.adjoint());
    auto a = measure_distribution(rho), b = measure_distribution(out);
    for (std::size_t i = 0; i < a.probabilities.size(); ++i)
      EXPECT_NEAR(a.probabilities[i], b.probabilities[i], 1e-12);
  }
}

TEST(Circuit, QaoaEmptyAndZeroGamma) {
  QAOAConfig empty{complete_graph(3), {}, {}};
  auto arch = build_qaoa_circuit(empty);
  EXPECT_EQ(arch.depth(), 0u);
  auto plus = plus_state(3);
  EXPECT_LE((simulate_circuit(arch, std::nullopt, plus).final_state.matrix() - plus.matrix()).norm(),
            1e-15);
  QAOAConfig zero{complete_graph(3), {0.0, 0.0}, {0.4, 1.1}};
  auto out = simulate_circuit(build_qaoa_circuit(zero), std::nullopt, plus).final_state;
  EXPECT_LE((out.matrix() - plus.matrix()).norm(), 1e-12);
}

TEST(Circuit, QaoaUnitaryMatchesDenseExponentials) {
  Graph tri = complete_graph(3);
  QAOAConfig cfg{tri, {0.3}, {0.2}};
  auto arch = build_qaoa_circuit(cfg);
  ASSERT_EQ(arch.depth(), 2u);
  ComplexMatrix hx = transverse_field(3);
  ComplexMatrix direct = expm_i(hx, 0.2) * expm_i(maxcut_hamiltonian(tri).matrix(), 0.3);
  EXPECT_LE((circuit_unitary(arch) - direct).norm(), 1e-12);
}

TEST(Circuit, QaoaStatevectorAgreesWithDensitySimulation) {
  Graph g = cycle_graph(4);
  std::vector<double> gamma{0.4, 0.9}, beta{0.7, 0.25};
  auto out = simulate_circuit(build_qaoa_circuit({g, gamma, beta}), std::nullopt, plus_state(4))
                 .final_state;
  EXPECT_NEAR(qaoa_expected_cut(g, gamma, beta), maxcut_hamiltonian(g).expectation(out), 1e-12);
}

TEST(Circuit, OverlappingSupportsRejected) {
  CircuitArchitecture arch{qubits(3), {}};
  GateLayer layer;
  layer.supports = {{0, 1}, {1, 2}};
  layer.channels = {{identity(4)}, {identity(4)}};
  arch.layers.push_back(layer);
  EXPECT_THROW(arch.validate(), ValidationError);
}

TEST(Circuit, DimensionMismatchRejected) {
  auto arch = ghz_circuit(3);
  EXPECT_THROW(simulate_circuit(arch, std::nullopt, basis_state(qubits(2), 0)), ValidationError);
}

TEST(Circuit, GhzCircuitPreparesGhz) {
  auto out = simulate_circuit(ghz_circuit(5), std::nullopt, basis_state(qubits(5), 0)).final_state;
  EXPECT_LE((out.matrix() - ghz_state(5).matrix()).norm(), 1e-12);
}

TEST(Circuit, FullDepolarizingGivesMaximallyMixed) {
  Rng rng(37);
  auto arch = random_brickwork(3, 2, rng);
  auto res = simulate_circuit(arch, NoiseModel::depolarizing(1.0), basis_state(qubits(3), 5));
  ASSERT_EQ(res.trajectory.size(), 2u);
  EXPECT_LE((res.trajectory[0].matrix() - maximally_mixed(qubits(3)).matrix()).norm(), 1e-14);
}

TEST(Circuit, NoiselessMatchesDenseUnitaryProperty) {
  Rng rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    auto arch = random_brickwork(4, 1 + trial % 4, rng);
    auto rho = random_density_matrix(qubits(4), rng);
    ComplexMatrix u = circuit_unitary(arch);
    auto out = simulate_circuit(arch, NoiseModel::depolarizing(0.0), rho).final_state;
    EXPECT_LE((out.matrix() - u * rho.matrix() * u.adjoint()).norm(), 1e-10);
  }
}

TEST(Circuit, NoisyTrajectoryPreservesStateAndDecreasesD2) {
  Rng rng(43);
  auto arch = random_brickwork(4, 3, rng);
  auto res = simulate_circuit(arch, NoiseModel::depolarizing(0.1), basis_state(qubits(4), 0));
  double prev = d2_uniform(basis_state(qubits(4), 0));
  for (const auto& s : res.trajectory) {
    EXPECT_NEAR(s.matrix().trace().real(), 1.0, 1e-10);
    EXPECT_GE(s.min_eigenvalue(), -1e-10);
    double d = renyi_divergence(s, maximally_mixed(qubits(4)), 2.0).value;
    EXPECT_NEAR(d, d2_uniform(s), 1e-10);
    EXPECT_LT(d, prev);
    prev = d;
  }
}

TEST(Circuit, HeisenbergAdjointProperty) {
  Rng rng(47);
  auto arch = random_brickwork(3, 2, rng);
  for (const auto& layer : arch.layers) {
    auto rho = random_density_matrix(qubits(3), rng).matrix();
    auto o = random_hermitian(8, rng);
    Complex a = (o * apply_layer(layer, qubits(3), rho)).trace();
    Complex b = (apply_layer_adjoint(layer, qubits(3), o) * rho).trace();
    EXPECT_LE(std::abs(a - b), 1e-12);
  }
}

TEST(Noise, FixedPoints) {
  auto gd = NoiseModel::generalized_depolarizing(0.3, 0.2);
  EXPECT_LE((gd.as_map()(tau_matrix(0.3)) - tau_matrix(0.3)).norm(), 1e-14);
  EXPECT_LE((gd.fixed_point() - tau_matrix(0.3)).norm(), 1e-14);
  auto gad = NoiseModel::custom(generalized_amplitude_damping(0.3, 0.4));
  EXPECT_LE((gad.fixed_point() - tau_matrix(0.3)).norm(), 1e-10);
  EXPECT_THROW(NoiseModel::depolarizing(1.5), ValidationError);
  EXPECT_THROW(NoiseModel::custom({0.5 * identity(2)}), ValidationError);
}

TEST(Noise, DepolarizingAction) {
  auto dep = NoiseModel::depolarizing(0.25);
  ComplexMatrix rho = basis_state(qubits(1), 0).matrix();
  ComplexMatrix expect = 0.75 * rho + 0.25 * 0.5 * identity(2);
  EXPECT_LE((dep.as_map()(rho) - expect).norm(), 1e-15);
}

TEST(Lindblad, ZeroDriveRelaxesToTau) {
  AnnealSchedule s;
  s.q = 0.3;
  s.T = 20.0;
  s.f = PiecewiseLinear::constant(0.0);
  s.g = PiecewiseLinear::constant(0.0);
  auto res = simulate_lindblad(s, cycle_graph(3), plus_state(3), 0.02);
  EXPECT_LE(trace_norm_hermitian(res.final_state.matrix() - product_state_tau(0.3, 3).matrix()),
            1e-6);
}

TEST(Lindblad, TraceAndPositivityAlongTrajectory) {
  AnnealSchedule s;
  s.q = 0.4;
  s.T = 3.0;
  LindbladOptions o;
  o.sample_every = 10;
  auto res = simulate_lindblad(s, complete_graph(3), plus_state(3), 0.01, o);
  EXPECT_FALSE(res.trajectory.empty());
  for (const auto& rho : res.trajectory) {
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-8);
    EXPECT_GE(rho.min_eigenvalue(), -1e-8);
  }
  EXPECT_LE(res.max_trace_drift, 1e-8);
}

TEST(Lindblad, EntropyBelowAnnealerBound) {
  AnnealSchedule s;
  s.q = 0.4;
  s.T = 4.0;
  auto res = simulate_lindblad(s, complete_graph(3), plus_state(3), 0.01);
  double d2 = renyi_divergence(res.final_state, product_state_tau(0.4, 3), 2.0).value;
  EXPECT_LE(d2, 3 * h_of_T(0.4, 4.0));
}

TEST(Lindblad, StepTooLargeRejected) {
  AnnealSchedule s;
  s.T = 1.0;
  EXPECT_THROW(simulate_lindblad(s, path_graph(2), plus_state(2), 0.5), ValidationError);
}

TEST(LiebRobinson, TrivialCases) {
  auto terms = xx_chain(5);
  Rng rng(53);
  auto rho = random_product_state(qubits(5), rng);
  std::vector<int> a{0}, b{0, 1};
  EXPECT_NEAR(lr_discrepancy(terms, a, b, 0.0, rho), 0.0, 1e-14);
  std::vector<int> all{0, 1, 2, 3, 4};
  EXPECT_NEAR(lr_discrepancy(terms, a, all, 0.7, rho), 0.0, 1e-12);
  std::vector<int> not_super{1, 2};
  EXPECT_THROW(lr_discrepancy(terms, a, not_super, 0.5, rho), ValidationError);
}

TEST(LiebRobinson, DiscrepancyBelowBound) {
  auto terms = xx_chain(7);
  Graph chain = path_graph(7);
  InteractionGraphParams p;
  p.D = 2;
  p.delta = 1;
  p.M = chain.edge_sphere_constant(1);
  p.b = coupling_bound(terms);
  Rng rng(59);
  auto rho = random_product_state(qubits(7), rng);
  std::vector<int> a{0}, b{0, 1, 2};
  EXPECT_LE(lr_discrepancy(terms, a, b, 0.5, rho), lr_bound(p, 0.5, 3));
}

TEST(LiebRobinson, TermNormChecked) {
  auto terms = xx_chain(3, 1.0);
  terms[0].h *= 3.0;
  auto rho = plus_state(3);
  std::vector<int> a{0}, b{0, 1};
  EXPECT_THROW(lr_discrepancy(terms, a, b, 0.2, rho), ValidationError);
}
