#pragma once

// Randomized verification suites: each draws instances from a seeded RNG,
// evaluates an inequality exactly on the simulator and tallies violations.

#include <cstdint>
#include <string>
#include <vector>

#include "qlimits/maxcut.hpp"

namespace qlimits {

struct SuiteSummary {
  std::string name;
  int cases = 0;
  int violations = 0;
  double worst_slack = 0.0;  // min over cases of (bound - measured)
  std::vector<std::string> notes;

  bool passed() const { return cases > 0 && violations == 0; }
  void record(double bound, double measured, double tol = 0.0);
};

struct PoincareSuiteOptions {
  int n = 8;
  int max_depth = 3;
  int circuits = 20;
  int observables = 50;
  int set_pairs = 100;
  std::uint64_t seed = 7;
};

struct PoincareSuiteResult {
  SuiteSummary variance;       // Var <= 4 I_max^2 n ||O||_L^2
  SuiteSummary concentration;  // symmetric concentration on measured outputs
  int ghz_n = 64;
  bool ghz_rejected = false;   // GHZ violates the inequality at C = 4
  double ghz_rhs = 0.0;
};

PoincareSuiteResult poincare_suite(const PoincareSuiteOptions& options = {});

struct DecaySuiteOptions {
  int cases = 30;
  std::vector<int> sizes{4, 5, 6};
  int max_depth = 4;
  std::vector<double> noise{0.1, 0.3};
  std::uint64_t seed = 3;
};

// D_2(N_V(rho) || I/2^n) <= (1-p)^{2L} D_2(rho || I/2^n) for random
// brickwork circuits from |0...0> with depolarizing noise after every layer.
SuiteSummary depolarizing_decay_suite(const DecaySuiteOptions& options = {});

struct PuritySuiteOptions {
  int n = 6;
  double p = 0.2;
  int max_depth = 4;
  int trials_per_depth = 5;
  std::uint64_t seed = 5;
};

// tr[rho^2] <= exp(-ln2 (1 - (1-p)^{2L}) n), together with tr[rho^k] <= tr[rho^2].
SuiteSummary purity_suite(const PuritySuiteOptions& options = {});

struct TransferSuiteOptions {
  int triples = 200;
  int n = 3;
  std::vector<double> alphas{1.5, 2.0, 4.0};
  std::uint64_t seed = 13;
};

SuiteSummary transfer_suite(const TransferSuiteOptions& options = {});

struct W1SuiteOptions {
  int n = 6;
  int pairs = 100;
  int triples = 100;
  std::uint64_t seed = 17;
};

struct W1SuiteResult {
  SuiteSummary duality;   // |primal - dual| <= 1e-8
  SuiteSummary triangle;  // W(a, c) <= W(a, b) + W(b, c)
};

W1SuiteResult w1_suite(const W1SuiteOptions& options = {});

struct AnnealerSuiteOptions {
  int n = 3;
  double q = 0.4;
  std::vector<double> times{2.0, 5.0, 10.0};
  int steps = 400;  // RK4 steps per run before halving
};

struct AnnealerSuiteResult {
  SuiteSummary entropy;  // D_2(rho_T || tau_q^n) <= n h(T)
  double worst_halving = 0.0;
  bool halving_ok = false;
};

AnnealerSuiteResult annealer_suite(const AnnealerSuiteOptions& options = {});

struct LiebRobinsonSuiteOptions {
  int n = 7;
  std::vector<double> times{0.25, 0.5, 1.0};
  std::vector<int> k0{2, 3};
  std::uint64_t seed = 19;
};

SuiteSummary lieb_robinson_suite(const LiebRobinsonSuiteOptions& options = {});

struct SymmetryRun {
  QAOAOptimum optimum;
  SymmetryReport report;
};

// Grid-optimised depth-P QAOA on K_{3,3} fed to symmetry_experiment.
SymmetryRun symmetry_k33(int P = 2, int points = 16);

}  // namespace qlimits
