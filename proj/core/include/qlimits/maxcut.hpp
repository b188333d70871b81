#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlimits/graph.hpp"
#include "qlimits/quantum.hpp"

namespace qlimits {

// Number of edges whose endpoints carry different bits in x.
int cut_value(const Graph& g, std::uint64_t x);
int cut_value(const Graph& g, const std::string& bits);

struct MaxCutResult {
  int c_max = 0;
  std::uint64_t x_opt = 0;
};

// Exhaustive search over the 2^(n-1) bipartitions with vertex 0 on side 0.
// Throws SizeError for n > 24.
MaxCutResult max_cut_bruteforce(const Graph& g);

struct ExpansionReport {
  int degree = 0;
  double h = 0.0;  // D/2 - sqrt(D-1)
  bool passed = true;
  std::optional<std::uint64_t> violating;
  double worst_margin = 0.0;  // min over x of C(x) - h min(|x|, n-|x|)
};

// Checks C(x) >= h min(|x|, n-|x|) for every x. Requires a regular graph with
// n <= 20.
ExpansionReport expansion_check(const Graph& g);

// (1/2) sum_{(j,k) in E} (I - Z_j Z_k): diagonal entry at x is cut_value(x).
Observable maxcut_hamiltonian(const Graph& g);
// -sum_{i,j} A_ij Z_i Z_j - sum_i b_i Z_i.
Observable ising_hamiltonian(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

// Configuration-model pairing between sides {0..n/2-1} and {n/2..n-1},
// rejecting multi-edges. Deterministic under seed.
Graph random_regular_bipartite(int n, int degree, std::uint64_t seed, int max_attempts = 10000);

struct SymmetryReport {
  // Preconditions.
  double flip_commutator = 0.0;  // max |[rho, X^{(x)n}]|
  bool flip_symmetric = false;
  bool bipartite_regular = false;
  bool expansion_holds = false;
  double energy = 0.0;            // tr[rho H]
  double energy_threshold = 0.0;  // |E| - h n / 6
  bool energy_condition = false;
  // Experiment.
  std::uint64_t x_opt = 0;
  double radius = 0.0;  // n / 3
  double p_opt = 0.0;   // P(d_H(X, x_opt) <= n/3)
  double p_bar = 0.0;   // P(d_H(X, complement of x_opt) <= n/3)
  bool equal = false;          // |p_opt - p_bar| <= 1e-9
  bool at_least_quarter = false;
  bool assertion_mode = false;  // every precondition held
  bool passed = false;          // assertion mode and both checks hold
  std::vector<std::string> failed_preconditions;
};

// Expected cut of the pure QAOA state e^{-i beta_P X}...e^{i gamma_1 H}|+>^n,
// computed on the state vector.
double qaoa_expected_cut(const Graph& g, const std::vector<double>& gamma,
                         const std::vector<double>& beta);

struct QAOAOptimum {
  std::vector<double> gamma, beta;
  double grid_energy = 0.0;  // best value on the grid
  double energy = 0.0;       // after local pattern search
  long long evaluations = 0;
};

// Exhaustive grid over gamma in [0, 2 pi), beta in [0, pi) with `points`
// values per angle, then a compass search from the best grid point.
QAOAOptimum optimize_qaoa_grid(const Graph& g, int P, int points, bool refine = true);

SymmetryReport symmetry_experiment(const DensityMatrix& rho, const Graph& g);

}  // namespace qlimits
