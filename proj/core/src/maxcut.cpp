#include "qlimits/maxcut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace qlimits {

int cut_value(const Graph& g, std::uint64_t x) {
  int n = g.n();
  int c = 0;
  for (auto [a, b] : g.edges()) c += vertex_bit(x, a, n) != vertex_bit(x, b, n);
  return c;
}

int cut_value(const Graph& g, const std::string& bits) {
  if (static_cast<int>(bits.size()) != g.n()) throw ValidationError("bitstring length mismatch");
  std::uint64_t x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError("bitstring must contain only 0 and 1");
    x = (x << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return cut_value(g, x);
}

MaxCutResult max_cut_bruteforce(const Graph& g) {
  if (g.n() > 24) throw SizeError("brute-force Max-Cut is limited to 24 vertices");
  MaxCutResult best;
  if (g.n() == 0) return best;
  const std::uint64_t half = std::uint64_t{1} << (g.n() - 1);
  for (std::uint64_t x = 0; x < half; ++x) {
    int c = cut_value(g, x);
    if (c > best.c_max) best = {c, x};
  }
  return best;
}

ExpansionReport expansion_check(const Graph& g) {
  if (!g.is_regular()) throw ValidationError("expansion check requires a regular graph");
  if (g.n() > 20) throw SizeError("exhaustive expansion check is limited to 20 vertices");
  ExpansionReport r;
  const int n = g.n();
  r.degree = n > 0 ? g.degree(0) : 0;
  r.h = r.degree / 2.0 - std::sqrt(std::max(r.degree - 1, 0));
  r.worst_margin = std::numeric_limits<double>::infinity();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) {
    int w = hamming_weight(x);
    double margin = cut_value(g, x) - r.h * std::min(w, n - w);
    if (margin < r.worst_margin) r.worst_margin = margin;
    if (margin < -1e-12 && r.passed) {
      r.passed = false;
      r.violating = x;
    }
  }
  return r;
}

Observable maxcut_hamiltonian(const Graph& g) {
  RegisterShape shape = qubits(g.n());
  RealVector diag(shape.dim());
  for (long long x = 0; x < shape.dim(); ++x) diag(x) = cut_value(g, static_cast<std::uint64_t>(x));
  return Observable::from_diagonal(shape, diag);
}

Observable ising_hamiltonian(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const int n = static_cast<int>(b.size());
  if (a.rows() != n || a.cols() != n) throw ValidationError("coupling matrix must be n x n");
  RegisterShape shape = qubits(n);
  RealVector diag = RealVector::Zero(shape.dim());
  for (long long x = 0; x < shape.dim(); ++x) {
    double e = 0.0;
    auto z = [&](int v) { return vertex_bit(static_cast<std::uint64_t>(x), v, n) ? -1.0 : 1.0; };
    for (int i = 0; i < n; ++i) {
      e -= b(i) * z(i);
      for (int j = 0; j < n; ++j) e -= a(i, j) * z(i) * z(j);
    }
    diag(x) = e;
  }
  return Observable::from_diagonal(shape, diag);
}

Graph random_regular_bipartite(int n, int degree, std::uint64_t seed, int max_attempts) {
  if (n <= 0 || n % 2 != 0) throw ValidationError("bipartite regular graph needs even n");
  if (degree < 1 || degree > n / 2) throw ValidationError("degree must lie in [1, n/2]");
  const int half = n / 2;
  Rng rng(seed);
  std::vector<int> right;
  for (int v = 0; v < half; ++v)
    for (int k = 0; k < degree; ++k) right.push_back(half + v);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(right.begin(), right.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (int i = 0; i < half * degree && ok; ++i) {
      Edge e{i / degree, right[i]};
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) ok = false;
      edges.push_back(e);
    }
    if (!ok) continue;
    Graph g(n, edges);
    if (!g.is_regular() || g.degree(0) != degree) continue;
    return g;
  }
  throw ConvergenceError("rejection budget exceeded while sampling a regular bipartite graph");
}

namespace {

struct QaoaEvaluator {
  const Graph& g;
  std::vector<double> cut;
  int n;

  explicit QaoaEvaluator(const Graph& graph) : g(graph), n(graph.n()) {
    if (n > max_qubits()) throw SizeError("graph exceeds the register cap");
    cut.resize(std::size_t{1} << n);
    for (std::size_t x = 0; x < cut.size(); ++x) cut[x] = cut_value(g, x);
  }

  double operator()(const std::vector<double>& gamma, const std::vector<double>& beta) const {
    const std::size_t dim = cut.size();
    std::vector<Complex> psi(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      for (std::size_t x = 0; x < dim; ++x) psi[x] *= std::polar(1.0, gamma[k] * cut[x]);
      const double c = std::cos(beta[k]), s = std::sin(beta[k]);
      for (int v = 0; v < n; ++v) {
        const std::size_t mask = std::size_t{1} << (n - 1 - v);
        for (std::size_t x = 0; x < dim; ++x) {
          if (x & mask) continue;
          Complex a = psi[x], b = psi[x | mask];
          psi[x] = c * a - Complex(0.0, s) * b;
          psi[x | mask] = c * b - Complex(0.0, s) * a;
        }
      }
    }
    double e = 0.0;
    for (std::size_t x = 0; x < dim; ++x) e += std::norm(psi[x]) * cut[x];
    return e;
  }
};

}  // namespace

double qaoa_expected_cut(const Graph& g, const std::vector<double>& gamma,
                         const std::vector<double>& beta) {
  if (gamma.size() != beta.size()) throw ValidationError("gamma and beta must both have length P");
  return QaoaEvaluator(g)(gamma, beta);
}

QAOAOptimum optimize_qaoa_grid(const Graph& g, int P, int points, bool refine) {
  if (P < 1 || points < 2) throw ValidationError("need P >= 1 and at least 2 grid points");
  const QaoaEvaluator eval(g);
  const double two_pi = 2.0 * std::numbers::pi;
  QAOAOptimum best;
  best.grid_energy = -std::numeric_limits<double>::infinity();
  std::vector<int> idx(2 * P, 0);
  std::vector<double> gamma(P), beta(P);
  for (;;) {
    for (int k = 0; k < P; ++k) {
      gamma[k] = two_pi * idx[k] / points;
      beta[k] = std::numbers::pi * idx[P + k] / points;
    }
    double e = eval(gamma, beta);
    ++best.evaluations;
    if (e > best.grid_energy) {
      best.grid_energy = e;
      best.gamma = gamma;
      best.beta = beta;
    }
    int pos = 0;
    while (pos < 2 * P && ++idx[pos] == points) idx[pos++] = 0;
    if (pos == 2 * P) break;
  }
  best.energy = best.grid_energy;
  if (!refine) return best;
  double step = std::numbers::pi / points;
  while (step > 1e-10) {
    bool improved = false;
    for (int k = 0; k < 2 * P; ++k) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> gm = best.gamma, bt = best.beta;
        (k < P ? gm[k] : bt[k - P]) += dir * step;
        double e = eval(gm, bt);
        ++best.evaluations;
        if (e > best.energy + 1e-15) {
          best.energy = e;
          best.gamma = gm;
          best.beta = bt;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

SymmetryReport symmetry_experiment(const DensityMatrix& rho, const Graph& g) {
  if (rho.n() != g.n() || rho.shape().d != 2)
    throw ValidationError("state and graph sizes differ");
  SymmetryReport r;
  const int n = g.n();
  const long long dim = rho.dim();
  const std::uint64_t all = static_cast<std::uint64_t>(dim - 1);

  // X^{(x)n} maps index i to i ^ all, so [rho, X] vanishes iff rho(i,j) = rho(~i,~j).
  for (long long i = 0; i < dim; ++i)
    for (long long j = 0; j < dim; ++j)
      r.flip_commutator = std::max(
          r.flip_commutator, std::abs(rho.matrix()(i, j) - rho.matrix()(i ^ all, j ^ all)));
  r.flip_symmetric = r.flip_commutator <= 1e-10;
  if (!r.flip_symmetric) r.failed_preconditions.push_back("state does not commute with X^n");

  r.bipartite_regular = g.is_bipartite() && g.is_regular() && g.edge_count() > 0;
  if (!r.bipartite_regular) r.failed_preconditions.push_back("graph is not bipartite regular");

  double h = 0.0;
  if (g.is_regular() && n <= 20) {
    ExpansionReport e = expansion_check(g);
    r.expansion_holds = e.passed;
    h = e.h;
  }
  if (!r.expansion_holds) r.failed_preconditions.push_back("expansion hypothesis fails");

  r.energy = maxcut_hamiltonian(g).expectation(rho);
  r.energy_threshold = static_cast<double>(g.edge_count()) - h * n / 6.0;
  r.energy_condition = r.energy >= r.energy_threshold;
  if (!r.energy_condition) r.failed_preconditions.push_back("energy condition fails");

  r.x_opt = max_cut_bruteforce(g).x_opt;
  const std::uint64_t x_bar = r.x_opt ^ all;
  r.radius = n / 3.0;
  MeasuredDistribution mu = measure_distribution(rho);
  for (long long x = 0; x < dim; ++x) {
    auto ux = static_cast<std::uint64_t>(x);
    if (hamming_distance(ux, r.x_opt) <= r.radius) r.p_opt += mu.probabilities[x];
    if (hamming_distance(ux, x_bar) <= r.radius) r.p_bar += mu.probabilities[x];
  }
  r.equal = std::abs(r.p_opt - r.p_bar) <= 1e-9;
  r.at_least_quarter = r.p_opt >= 0.25 && r.p_bar >= 0.25;
  r.assertion_mode = r.failed_preconditions.empty();
  r.passed = r.assertion_mode && r.equal && r.at_least_quarter;
  return r;
}

}  // namespace qlimits
