#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "qlimits/graph.hpp"
#include "qlimits/maxcut.hpp"
#include "qlimits/transport.hpp"

using namespace qlimits;

TEST(Graph, RejectsInvalidEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), ValidationError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(Graph(3, {{0, 3}}), ValidationError);
}

TEST(Graph, BasicFamilies) {
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(complete_graph(4).edge_count(), 6u);
  EXPECT_TRUE(complete_bipartite(3, 3).is_regular());
  EXPECT_TRUE(complete_bipartite(2, 3).is_bipartite());
  EXPECT_FALSE(cycle_graph(5).is_bipartite());
  EXPECT_EQ(path_graph(4).max_degree(), 2);
  auto dist = path_graph(5).distances_from(0);
  EXPECT_EQ(dist, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(Graph, EdgeSphereConstantOfChain) {
  // Each edge of a long path has at most two edges at every distance.
  EXPECT_DOUBLE_EQ(path_graph(9).edge_sphere_constant(1), 2.0);
}

TEST(Bits, BigEndianConvention) {
  EXPECT_EQ(vertex_bit(0b100, 0, 3), 1);
  EXPECT_EQ(vertex_bit(0b100, 2, 3), 0);
  EXPECT_EQ(hamming_distance(0b1010, 0b0110), 2);
  EXPECT_EQ(hamming_weight(0xFF), 8);
}

TEST(Cut, SmallCases) {
  EXPECT_EQ(cut_value(cycle_graph(4), 0), 0);
  Graph k2(2, {{0, 1}});
  EXPECT_EQ(cut_value(k2, "01"), 1);
  EXPECT_THROW(cut_value(k2, "011"), ValidationError);
}

TEST(Cut, XorIdentityOnBipartiteGraphsProperty) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = random_regular_bipartite(8 + 2 * (trial % 3), 3, rng());
    auto best = max_cut_bruteforce(g);
    EXPECT_EQ(best.c_max, static_cast<int>(g.edge_count()));
    for (std::uint64_t x = 0; x < (1ull << g.n()); ++x)
      ASSERT_EQ(cut_value(g, x) + cut_value(g, x ^ best.x_opt), static_cast<int>(g.edge_count()));
  }
}

TEST(BruteForce, KnownOptima) {
  EXPECT_EQ(max_cut_bruteforce(cycle_graph(6)).c_max, 6);
  EXPECT_EQ(max_cut_bruteforce(cycle_graph(5)).c_max, 4);
  EXPECT_EQ(max_cut_bruteforce(complete_graph(4)).c_max, 4);
  EXPECT_THROW(max_cut_bruteforce(path_graph(25)), SizeError);
}

TEST(Expansion, HAndExhaustiveChecks) {
  auto k33 = expansion_check(complete_bipartite(3, 3));
  EXPECT_NEAR(k33.h, 1.5 - std::sqrt(2.0), 1e-15);
  EXPECT_TRUE(k33.passed);
  // Two triangles joined by one edge: 3-regular fails only if a small cut is
  // cheap enough. Use two K4's sharing nothing but a matching edge pair.
  Graph twin(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 3},
                 {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}, {4, 7}});
  auto r = expansion_check(twin);  // disconnected: splitting the components cuts nothing
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.violating.has_value());
  int w = hamming_weight(*r.violating);
  EXPECT_LT(cut_value(twin, *r.violating), r.h * std::min(w, 8 - w));
  EXPECT_THROW(expansion_check(path_graph(4)), ValidationError);
}

TEST(Hamiltonian, DiagonalEqualsCutExhaustive) {
  for (const Graph& g : {cycle_graph(5), complete_graph(4), complete_bipartite(3, 3)}) {
    auto h = maxcut_hamiltonian(g);
    ASSERT_TRUE(h.is_diagonal());
    auto diag = h.diagonal_values();
    for (std::uint64_t x = 0; x < (1ull << g.n()); ++x) EXPECT_DOUBLE_EQ(diag(x), cut_value(g, x));
  }
  Graph k2(2, {{0, 1}});
  auto d = maxcut_hamiltonian(k2).diagonal_values();
  EXPECT_EQ(std::vector<double>(d.data(), d.data() + 4), (std::vector<double>{0, 1, 1, 0}));
  Graph empty(3, {});
  EXPECT_DOUBLE_EQ(maxcut_hamiltonian(empty).matrix().norm(), 0.0);
}

TEST(Hamiltonian, LipschitzEqualsDegreeOnRegularGraphs) {
  EXPECT_DOUBLE_EQ(lipschitz_classical(maxcut_hamiltonian(complete_bipartite(3, 3))).value, 3.0);
  EXPECT_DOUBLE_EQ(lipschitz_classical(maxcut_hamiltonian(cycle_graph(6))).value, 2.0);
}

TEST(Hamiltonian, IsingSign) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 1) = 1.0;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(2);
  b(0) = 0.5;
  auto d = ising_hamiltonian(a, b).diagonal_values();
  // x = 00: -Z0Z1 - 0.5 Z0 = -1.5.
  EXPECT_DOUBLE_EQ(d(0), -1.5);
  // x = 10: Z0 = -1, Z1 = 1: +1 + 0.5.
  EXPECT_DOUBLE_EQ(d(2), 1.5);
}

TEST(RegularBipartite, ForcedAndDeterministic) {
  Graph g = random_regular_bipartite(6, 3, 1);
  EXPECT_EQ(g, complete_bipartite(3, 3));
  EXPECT_EQ(random_regular_bipartite(12, 3, 99), random_regular_bipartite(12, 3, 99));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph r = random_regular_bipartite(12, 3, seed);
    for (int v = 0; v < 12; ++v) ASSERT_EQ(r.degree(v), 3);
    ASSERT_TRUE(r.is_bipartite());
  }
  EXPECT_THROW(random_regular_bipartite(7, 3, 0), ValidationError);
  EXPECT_THROW(random_regular_bipartite(6, 4, 0), ValidationError);
}

TEST(Symmetry, CatStateGivesOneHalf) {
  Graph g = complete_bipartite(3, 3);
  auto best = max_cut_bruteforce(g);
  ComplexVector psi = ComplexVector::Zero(64);
  psi(best.x_opt) = psi(63 ^ best.x_opt) = 1.0 / std::sqrt(2.0);
  auto r = symmetry_experiment(pure_state(qubits(6), psi), g);
  EXPECT_TRUE(r.flip_symmetric);
  EXPECT_NEAR(r.p_opt, 0.5, 1e-14);
  EXPECT_NEAR(r.p_bar, 0.5, 1e-14);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.at_least_quarter);
  EXPECT_TRUE(r.energy_condition);
  EXPECT_TRUE(r.passed);
}

TEST(Symmetry, MaximallyMixedIsObservationMode) {
  auto r = symmetry_experiment(maximally_mixed(qubits(6)), complete_bipartite(3, 3));
  EXPECT_TRUE(r.equal);
  EXPECT_FALSE(r.energy_condition);
  EXPECT_FALSE(r.assertion_mode);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.failed_preconditions.empty());
}

TEST(Symmetry, EqualityForFlipSymmetricStatesProperty) {
  Rng rng(67);
  Graph g = complete_bipartite(3, 3);
  ComplexMatrix flip = identity(1);
  for (int i = 0; i < 6; ++i) flip = kron(flip, pauli_x());
  for (int trial = 0; trial < 10; ++trial) {
    auto rho = random_density_matrix(qubits(6), rng).matrix();
    ComplexMatrix sym = 0.5 * (rho + flip * rho * flip);
    auto r = symmetry_experiment(DensityMatrix(qubits(6), sym), g);
    EXPECT_TRUE(r.flip_symmetric);
    EXPECT_NEAR(r.p_opt, r.p_bar, 1e-9);
  }
}

TEST(Qaoa, GridOptimizerImprovesOnGrid) {
  auto opt = optimize_qaoa_grid(cycle_graph(4), 1, 8);
  EXPECT_GE(opt.energy, opt.grid_energy - 1e-12);
  EXPECT_NEAR(opt.energy, qaoa_expected_cut(cycle_graph(4), opt.gamma, opt.beta), 1e-12);
  // Ring of 4 at P = 1 reaches 3 of 4 edges in expectation.
  EXPECT_NEAR(opt.energy, 3.0, 1e-6);
}
