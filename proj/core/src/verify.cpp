#include "qlimits/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include "qlimits/bounds.hpp"
#include "qlimits/circuit.hpp"
#include "qlimits/entropy.hpp"
#include "qlimits/lieb_robinson.hpp"
#include "qlimits/lindblad.hpp"
#include "qlimits/noise.hpp"
#include "qlimits/poincare.hpp"
#include "qlimits/transport.hpp"

namespace qlimits {

void SuiteSummary::record(double bound, double measured, double tol) {
  double slack = bound - measured;
  if (cases == 0 || slack < worst_slack) worst_slack = slack;
  ++cases;
  if (slack < -tol) ++violations;
}

namespace {

double d2_against_uniform(const DensityMatrix& rho) {
  return std::log(static_cast<double>(rho.dim()) * rho.purity());
}

Observable random_test_observable(const RegisterShape& shape, int kind, Rng& rng) {
  const long long dim = shape.dim();
  if (kind == 0) {
    std::normal_distribution<double> gauss;
    RealVector diag(dim);
    for (long long i = 0; i < dim; ++i) diag(i) = gauss(rng);
    return Observable::from_diagonal(shape, diag);
  }
  if (kind == 1) {
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    std::uniform_int_distribution<int> site(0, shape.n - 2);
    for (int t = 0; t < shape.n; ++t) {
      int v = site(rng);
      std::vector<int> sup{v, v + 1};
      h += embed(random_hermitian(4, rng), sup, shape);
    }
    return Observable(shape, 0.5 * (h + h.adjoint()));
  }
  ComplexMatrix h = random_hermitian(dim, rng);
  return Observable(shape, 0.5 * (h + h.adjoint()));
}

std::vector<std::uint64_t> sample_set(const MeasuredDistribution& mu, Rng& rng) {
  std::discrete_distribution<std::uint64_t> pick(mu.probabilities.begin(), mu.probabilities.end());
  std::uniform_int_distribution<int> size(1, 8);
  std::vector<std::uint64_t> s;
  for (int k = size(rng); k > 0; --k) s.push_back(pick(rng));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

PoincareSuiteResult poincare_suite(const PoincareSuiteOptions& o) {
  PoincareSuiteResult res;
  res.variance.name = "poincare.noiseless.variance";
  res.concentration.name = "poincare.symmetric_concentration";
  Rng rng(o.seed);
  const RegisterShape shape = qubits(o.n);
  for (int c = 0; c < o.circuits; ++c) {
    int depth = 1 + c % o.max_depth;
    CircuitArchitecture arch = random_brickwork(o.n, depth, rng);
    DensityMatrix sigma =
        simulate_circuit(arch, std::nullopt, basis_state(shape, 0), {false, false}).final_state;
    const double C = poincare_noiseless(arch).value;
    for (int k = 0; k < o.observables; ++k) {
      Observable obs = random_test_observable(shape, k % 3, rng);
      double lip = obs.is_diagonal() ? lipschitz_classical(obs).value
                                     : lipschitz_quantum_bound(obs).value;
      res.variance.record(C * o.n * lip * lip, variance(sigma, obs));
    }
    MeasuredDistribution mu = measure_distribution(sigma);
    for (int k = 0; k < o.set_pairs; ++k) {
      auto a = sample_set(mu, rng);
      auto b = sample_set(mu, rng);
      auto r = symmetric_concentration_check(mu, a, b, C);
      res.concentration.record(r.rhs, r.hamming_distance);
    }
  }
  res.variance.notes.push_back("Lipschitz constants use the partial-trace surrogate, an upper bound");
  // GHZ: all-zeros and all-ones each carry 1/2 at Hamming distance n.
  auto ghz = symmetric_concentration_bound(res.ghz_n, res.ghz_n, 0.5, 0.5, 4.0);
  res.ghz_rejected = !ghz.passed;
  res.ghz_rhs = ghz.rhs;
  return res;
}

SuiteSummary depolarizing_decay_suite(const DecaySuiteOptions& o) {
  SuiteSummary s;
  s.name = "entropy.depolarizing_decay";
  Rng rng(o.seed);
  for (int c = 0; c < o.cases; ++c) {
    int n = o.sizes[c % o.sizes.size()];
    int L = 1 + (c / static_cast<int>(o.sizes.size())) % o.max_depth;
    double p = o.noise[c % o.noise.size()];
    CircuitArchitecture arch = random_brickwork(n, L, rng);
    DensityMatrix rho0 = basis_state(qubits(n), 0);
    DensityMatrix out = simulate_circuit(arch, NoiseModel::depolarizing(p), rho0, {false, false})
                            .final_state;
    double bound = std::pow(1.0 - p, 2.0 * L) * d2_against_uniform(rho0);
    s.record(bound, d2_against_uniform(out), 1e-12);
  }
  s.notes.push_back("input |0...0>, noise after every unitary layer");
  return s;
}

SuiteSummary purity_suite(const PuritySuiteOptions& o) {
  SuiteSummary s;
  s.name = "entropy.purity_depolarizing";
  Rng rng(o.seed);
  const RegisterShape shape = qubits(o.n);
  int moment_failures = 0;
  for (int L = 1; L <= o.max_depth; ++L) {
    for (int t = 0; t < o.trials_per_depth; ++t) {
      CircuitArchitecture arch = random_brickwork(o.n, L, rng);
      DensityMatrix out =
          simulate_circuit(arch, NoiseModel::depolarizing(o.p), basis_state(shape, 0), {false, false})
              .final_state;
      s.record(purity_decay_depolarizing(o.p, L, o.n), out.purity(), 1e-12);
      for (int k = 3; k <= 4; ++k)
        if (!moment_ordering_holds(out, k)) ++moment_failures;
    }
  }
  if (moment_failures > 0) {
    s.violations += moment_failures;
    s.notes.push_back("higher moment exceeded the purity");
  }
  return s;
}

SuiteSummary transfer_suite(const TransferSuiteOptions& o) {
  SuiteSummary s;
  s.name = "entropy.transfer_inequality";
  Rng rng(o.seed);
  const RegisterShape shape = qubits(o.n);
  std::uniform_int_distribution<int> rank(1, static_cast<int>(shape.dim()) - 1);
  for (int t = 0; t < o.triples; ++t) {
    DensityMatrix rho = random_density_matrix(shape, rng);
    DensityMatrix sigma = random_density_matrix(shape, rng);
    ComplexMatrix e = random_projector(shape.dim(), rank(rng), rng);
    double lhs = (e * rho.matrix()).trace().real();
    double mass = (e * sigma.matrix()).trace().real();
    for (double alpha : o.alphas) {
      double d = renyi_divergence(rho, sigma, alpha).value;
      s.record(transfer_inequality_rhs(d, alpha, mass), lhs, 1e-12);
    }
  }
  return s;
}

W1SuiteResult w1_suite(const W1SuiteOptions& o) {
  W1SuiteResult res;
  res.duality.name = "transport.w1_duality";
  res.triangle.name = "transport.w1_triangle";
  Rng rng(o.seed);
  const RegisterShape shape = qubits(o.n);
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution keep(0.6);
  auto draw = [&] {
    std::vector<double> p(shape.dim());
    double total = 0.0;
    for (double& x : p) {
      x = keep(rng) ? expo(rng) : 0.0;
      total += x;
    }
    if (total == 0.0) {
      p[0] = 1.0;
      total = 1.0;
    }
    for (double& x : p) x /= total;
    return make_distribution(shape, p);
  };
  for (int k = 0; k < o.pairs; ++k) {
    auto mu = draw();
    auto nu = draw();
    auto r = w1_classical(mu, nu);
    double gap = std::abs(r.value - r.dual_value);
    res.duality.record(1e-8, gap);
  }
  for (int k = 0; k < o.triples; ++k) {
    auto a = draw(), b = draw(), c = draw();
    double ab = w1_classical(a, b).value, bc = w1_classical(b, c).value;
    double ac = w1_classical(a, c).value;
    res.triangle.record(ab + bc, ac, 1e-9);
  }
  return res;
}

AnnealerSuiteResult annealer_suite(const AnnealerSuiteOptions& o) {
  AnnealerSuiteResult res;
  res.entropy.name = "entropy.annealer_decay";
  Graph g = o.n == 3 ? complete_graph(3) : cycle_graph(o.n);
  DensityMatrix tau = product_state_tau(o.q, o.n);
  res.halving_ok = true;
  for (double T : o.times) {
    AnnealSchedule sched;
    sched.T = T;
    sched.q = o.q;
    sched.rate = 1.0;
    LindbladOptions lo;
    lo.check_halving = true;
    std::optional<LindbladResult> run;
    try {
      run.emplace(simulate_lindblad(sched, g, plus_state(o.n), T / o.steps, lo));
    } catch (const ConvergenceError& e) {
      res.halving_ok = false;
      res.entropy.notes.push_back(e.what());
      continue;
    }
    res.worst_halving = std::max(res.worst_halving, run->halving_difference.value_or(0.0));
    double d2 = renyi_divergence(run->final_state, tau, 2.0).value;
    res.entropy.record(o.n * h_of_T(o.q, T), d2, 1e-12);
  }
  res.halving_ok = res.halving_ok && res.worst_halving < 1e-6;
  return res;
}

SuiteSummary lieb_robinson_suite(const LiebRobinsonSuiteOptions& o) {
  SuiteSummary s;
  s.name = "quantum.lieb_robinson";
  Rng rng(o.seed);
  auto terms = xx_chain(o.n);
  Graph chain = path_graph(o.n);
  InteractionGraphParams params;
  params.D = chain.max_degree();
  params.delta = 1;
  params.M = chain.edge_sphere_constant(params.delta);
  params.b = coupling_bound(terms);
  DensityMatrix rho = random_product_state(qubits(o.n), rng);
  for (int k0 : o.k0) {
    if (k0 < 2 * params.delta - 1) continue;
    std::vector<int> b;
    for (int v = 0; v < k0; ++v) b.push_back(v);
    for (double t : o.times) s.record(lr_bound(params, t, k0), lr_discrepancy(terms, {0}, b, t, rho));
  }
  return s;
}

SymmetryRun symmetry_k33(int P, int points) {
  Graph g = complete_bipartite(3, 3);
  SymmetryRun run;
  run.optimum = optimize_qaoa_grid(g, P, points);
  QAOAConfig cfg{g, run.optimum.gamma, run.optimum.beta};
  DensityMatrix plus = plus_state(g.n());
  DensityMatrix out =
      simulate_circuit(build_qaoa_circuit(cfg), std::nullopt, plus, {false, false}).final_state;
  run.report = symmetry_experiment(out, g);
  return run;
}

}  // namespace qlimits
