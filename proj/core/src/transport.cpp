#include "qlimits/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qlimits/graph.hpp"

namespace qlimits {

const char* to_string(LipschitzMode mode) {
  switch (mode) {
    case LipschitzMode::exact_classical:
      return "exact_classical";
    case LipschitzMode::surrogate_quantum:
      return "surrogate_quantum";
    case LipschitzMode::certified_quantum:
      return "certified_quantum";
  }
  return "unknown";
}

double LipschitzEstimate::lower() const {
  const auto& src = per_vertex_lower.empty() ? per_vertex : per_vertex_lower;
  return src.empty() ? 0.0 : *std::max_element(src.begin(), src.end());
}

LipschitzEstimate lipschitz_classical(const RealVector& f, int n) {
  if (n < 1 || n > 30) throw ValidationError("bit count out of range");
  if (f.size() != (Eigen::Index{1} << n)) throw ValidationError("function table has wrong length");
  LipschitzEstimate out;
  out.mode = LipschitzMode::exact_classical;
  out.per_vertex.assign(n, 0.0);
  for (Eigen::Index x = 0; x < f.size(); ++x)
    for (int v = 0; v < n; ++v) {
      Eigen::Index y = x ^ (Eigen::Index{1} << (n - 1 - v));
      out.per_vertex[v] = std::max(out.per_vertex[v], std::abs(f(x) - f(y)));
    }
  out.value = *std::max_element(out.per_vertex.begin(), out.per_vertex.end());
  return out;
}

LipschitzEstimate lipschitz_classical(const Observable& o) {
  if (!o.is_diagonal())
    throw ValidationError(
        "observable is not diagonal; use lipschitz_quantum_bound for non-commuting observables");
  if (o.shape().d != 2) throw ValidationError("classical Lipschitz constant needs qubits");
  return lipschitz_classical(o.diagonal_values(), o.shape().n);
}

namespace {

std::vector<int> all_but(int v, int n) {
  std::vector<int> out;
  for (int u = 0; u < n; ++u)
    if (u != v) out.push_back(u);
  return out;
}

// I_v (x) tr_v(x) / d.
ComplexMatrix average_out(const ComplexMatrix& x, const RegisterShape& shape, int v) {
  int s[] = {v};
  ComplexMatrix rest = trace_out(x, shape, s) / static_cast<double>(shape.d);
  if (shape.n == 1) return rest(0, 0) * ComplexMatrix::Identity(shape.d, shape.d);
  return extend_with_identity(rest, all_but(v, shape.n), shape);
}

ComplexMatrix clip_spectrum(const ComplexMatrix& y, double c) {
  return matrix_function(y, [c](double x) { return std::clamp(x, -c, c); });
}

ComplexMatrix conjugate_site(const ComplexMatrix& u, const ComplexMatrix& o,
                             const RegisterShape& shape, int v) {
  int s[] = {v};
  ComplexMatrix left = apply_local_left(u, s, shape, o);
  return apply_local_left(u, s, shape, left.adjoint()).adjoint();
}

std::pair<double, double> certify_vertex(const ComplexMatrix& o, const RegisterShape& shape,
                                         int v, const CertifyOptions& opt, Rng& rng) {
  double lower = 0.0;
  std::vector<ComplexMatrix> probes;
  if (shape.d == 2) probes = {pauli_x(), pauli_y(), pauli_z()};
  for (int k = 0; k < opt.random_unitaries; ++k) probes.push_back(random_unitary(shape.d, rng));
  for (const auto& u : probes)
    lower = std::max(lower, hermitian_operator_norm(o - conjugate_site(u, o, shape, v)));

  ComplexMatrix y0 = o - average_out(o, shape, v);
  double best = hermitian_operator_norm(y0);
  double lo = 0.5 * lower, hi = best;
  for (int step = 0; step < opt.bisection_steps && hi - lo > 1e-9 * std::max(1.0, hi); ++step) {
    const double c = 0.5 * (lo + hi);
    ComplexMatrix y = y0;
    bool reached = false;
    for (int it = 0; it < opt.projection_iterations; ++it) {
      ComplexMatrix clipped = clip_spectrum(y, c);
      y = o - average_out(o - clipped, shape, v);
      double nb = hermitian_operator_norm(y);
      best = std::min(best, nb);
      if (nb <= c * (1.0 + 1e-9)) {
        reached = true;
        break;
      }
    }
    if (reached) {
      hi = std::min(c, best);
    } else {
      lo = c;
    }
  }
  return {lower, 2.0 * best};
}

}  // namespace

double lipschitz_surrogate_at(const ComplexMatrix& o, const RegisterShape& shape, int v) {
  return 2.0 * hermitian_operator_norm(o - average_out(o, shape, v));
}

LipschitzEstimate lipschitz_quantum_bound(const Observable& o, bool certified,
                                          const CertifyOptions& options) {
  const auto& shape = o.shape();
  LipschitzEstimate out;
  out.mode = certified ? LipschitzMode::certified_quantum : LipschitzMode::surrogate_quantum;
  Rng rng(options.seed);
  for (int v = 0; v < shape.n; ++v) {
    if (certified) {
      auto [lo, hi] = certify_vertex(o.matrix(), shape, v, options, rng);
      out.per_vertex_lower.push_back(lo);
      out.per_vertex.push_back(hi);
    } else {
      out.per_vertex.push_back(lipschitz_surrogate_at(o.matrix(), shape, v));
    }
  }
  out.value = *std::max_element(out.per_vertex.begin(), out.per_vertex.end());
  return out;
}

double variance(const DensityMatrix& rho, const ComplexMatrix& o) {
  if (o.rows() != rho.dim()) throw ValidationError("observable and state dimensions differ");
  const ComplexMatrix& r = rho.matrix();
  double mean = (r * o).trace().real();
  double second = (r * o * o).trace().real();
  return std::max(0.0, second - mean * mean);
}

double variance(const DensityMatrix& rho, const Observable& o) {
  if (!(rho.shape() == o.shape())) throw ValidationError("observable and state shapes differ");
  return variance(rho, o.matrix());
}

double kms_norm(const DensityMatrix& sigma, const ComplexMatrix& h) {
  if (h.rows() != sigma.dim() || h.cols() != sigma.dim())
    throw ValidationError("operator and state dimensions differ");
  ComplexMatrix s = matrix_power(sigma.matrix(), 0.5);
  double val = (h.adjoint() * s * h * s).trace().real();
  return std::sqrt(std::max(0.0, val));
}

ClassicalW1Result w1_classical(const MeasuredDistribution& mu, const MeasuredDistribution& nu) {
  if (!(mu.shape == nu.shape)) throw ValidationError("distributions live on different registers");
  if (mu.shape.d != 2) throw ValidationError("Hamming W1 is implemented for bitstrings");
  const std::size_t dim = mu.probabilities.size();
  std::vector<std::uint64_t> src, dst;
  std::vector<double> supply, demand;
  for (std::size_t x = 0; x < dim; ++x) {
    double delta = mu.probabilities[x] - nu.probabilities[x];
    if (delta > 0.0) {
      src.push_back(x);
      supply.push_back(delta);
    } else if (delta < 0.0) {
      dst.push_back(x);
      demand.push_back(-delta);
    }
  }
  if (src.size() > 4096 || dst.size() > 4096)
    throw SizeError("transportation problem support exceeds 4096 points");

  ClassicalW1Result out;
  out.potential.assign(dim, 0.0);
  const std::size_t S = src.size(), T = dst.size();
  if (S == 0 || T == 0) return out;

  std::vector<std::vector<double>> cost(S, std::vector<double>(T));
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < T; ++j) cost[i][j] = hamming_distance(src[i], dst[j]);
  std::vector<std::vector<double>> flow(S, std::vector<double>(T, 0.0));
  const double eps = 1e-15;

  // Successive shortest paths with node potentials; nodes 0..S-1 are
  // sources, S..S+T-1 are sinks.
  const std::size_t N = S + T;
  std::vector<double> phi(N, 0.0);
  const double inf = std::numeric_limits<double>::infinity();
  while (true) {
    double remaining = 0.0;
    for (double s : supply) remaining += s;
    double open_demand = 0.0;
    for (double d : demand) open_demand += d;
    if (remaining <= 1e-14 || open_demand <= 1e-14) break;

    std::vector<double> dist(N, inf);
    std::vector<long> prev(N, -1);
    std::vector<char> done(N, 0);
    for (std::size_t i = 0; i < S; ++i)
      if (supply[i] > eps) dist[i] = 0.0;
    for (std::size_t iter = 0; iter < N; ++iter) {
      std::size_t u = N;
      for (std::size_t k = 0; k < N; ++k)
        if (!done[k] && dist[k] < inf && (u == N || dist[k] < dist[u])) u = k;
      if (u == N) break;
      done[u] = 1;
      if (u < S) {
        for (std::size_t j = 0; j < T; ++j) {
          double rc = std::max(0.0, cost[u][j] + phi[u] - phi[S + j]);
          if (dist[u] + rc < dist[S + j]) {
            dist[S + j] = dist[u] + rc;
            prev[S + j] = static_cast<long>(u);
          }
        }
      } else {
        std::size_t j = u - S;
        for (std::size_t i = 0; i < S; ++i) {
          if (flow[i][j] <= eps) continue;
          double rc = std::max(0.0, -cost[i][j] + phi[u] - phi[i]);
          if (dist[u] + rc < dist[i]) {
            dist[i] = dist[u] + rc;
            prev[i] = static_cast<long>(u);
          }
        }
      }
    }
    std::size_t sink = N;
    for (std::size_t j = 0; j < T; ++j)
      if (demand[j] > eps && dist[S + j] < inf && (sink == N || dist[S + j] < dist[sink]))
        sink = S + j;
    if (sink == N) throw ConvergenceError("transportation solver found no augmenting path");
    double horizon = dist[sink];
    for (std::size_t k = 0; k < N; ++k) phi[k] += std::min(dist[k], horizon);

    // Bottleneck along the path.
    double amount = demand[sink - S];
    std::size_t v = sink;
    while (prev[v] >= 0) {
      auto u = static_cast<std::size_t>(prev[v]);
      if (u >= S) amount = std::min(amount, flow[v][u - S]);  // backward edge sink u -> source v
      v = u;
    }
    amount = std::min(amount, supply[v]);
    v = sink;
    while (prev[v] >= 0) {
      auto u = static_cast<std::size_t>(prev[v]);
      if (u < S) {
        flow[u][v - S] += amount;
      } else {
        flow[v][u - S] -= amount;
      }
      v = u;
    }
    supply[v] -= amount;
    demand[sink - S] -= amount;
  }

  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < T; ++j)
      if (flow[i][j] > eps) {
        out.value += flow[i][j] * cost[i][j];
        out.coupling.push_back({src[i], dst[j], flow[i][j]});
      }

  // Dual: shortest distances on the residual graph from a virtual root joined
  // to every node at cost 0 (Bellman-Ford; no negative cycles at optimality).
  std::vector<double> dist(N, 0.0);
  for (std::size_t round = 0; round < N + 1; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < S; ++i)
      for (std::size_t j = 0; j < T; ++j) {
        if (dist[i] + cost[i][j] < dist[S + j] - 1e-13) {
          dist[S + j] = dist[i] + cost[i][j];
          changed = true;
        }
        if (flow[i][j] > eps && dist[S + j] - cost[i][j] < dist[i] - 1e-13) {
          dist[i] = dist[S + j] - cost[i][j];
          changed = true;
        }
      }
    if (!changed) break;
    if (round == N) throw ConvergenceError("residual graph has a negative cycle");
  }
  // u_i = -dist_i, w_j = -dist_j satisfy u_i - w_j <= d(x_i, y_j); extend by
  // f(z) = min_j (w_j + d(z, y_j)).
  for (std::size_t z = 0; z < dim; ++z) {
    double f = inf;
    for (std::size_t j = 0; j < T; ++j) f = std::min(f, -dist[S + j] + hamming_distance(z, dst[j]));
    out.potential[z] = f;
  }
  for (std::size_t z = 0; z < dim; ++z)
    out.dual_value += out.potential[z] * (mu.probabilities[z] - nu.probabilities[z]);
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < T; ++j)
      if (flow[i][j] > eps)
        out.slackness_gap =
            std::max(out.slackness_gap, std::abs(-dist[i] + dist[S + j] - cost[i][j]));
  return out;
}

double telescoping_bound(const ComplexMatrix& delta, const RegisterShape& shape,
                         const std::vector<int>& ordering) {
  if (static_cast<int>(ordering.size()) != shape.n)
    throw ValidationError("ordering must list every vertex once");
  std::vector<int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  for (int v = 0; v < shape.n; ++v)
    if (sorted[v] != v) throw ValidationError("ordering must be a permutation of the vertices");
  const auto dim = static_cast<Eigen::Index>(shape.dim());
  ComplexMatrix prev = delta;
  std::vector<int> traced;
  double total = 0.0;
  double scale = 1.0;
  for (int i = 0; i < shape.n; ++i) {
    traced.push_back(ordering[i]);
    scale *= shape.d;
    ComplexMatrix cur;
    if (i + 1 == shape.n) {
      cur = delta.trace() / scale * ComplexMatrix::Identity(dim, dim);
    } else {
      std::vector<int> keep;
      for (int v = 0; v < shape.n; ++v)
        if (std::find(traced.begin(), traced.end(), v) == traced.end()) keep.push_back(v);
      cur = extend_with_identity(partial_trace(delta, shape, keep), keep, shape) / scale;
    }
    total += trace_norm_hermitian(prev - cur);
    prev = std::move(cur);
  }
  return 0.5 * total;
}

W1Result w1_quantum_bounds(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const W1Options& options) {
  if (!(rho.shape() == sigma.shape())) throw ValidationError("states live on different registers");
  const RegisterShape& shape = rho.shape();
  const int n = shape.n;
  ComplexMatrix delta = rho.matrix() - sigma.matrix();
  W1Result out;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  out.upper = telescoping_bound(delta, shape, order);
  out.best_ordering = order;
  Rng rng(options.seed);
  for (int k = 0; k < options.random_orderings && n > 1; ++k) {
    std::shuffle(order.begin(), order.end(), rng);
    double u = telescoping_bound(delta, shape, order);
    if (u < out.upper) {
      out.upper = u;
      out.best_ordering = order;
    }
  }

  // Sum of optimal single-site witnesses.
  double single = 0.0;
  for (int v = 0; v < n; ++v) {
    int keep[] = {v};
    single += 0.5 * trace_norm_hermitian(partial_trace(delta, shape, keep));
  }
  out.lower = single;
  out.lower_witness = "single-site";

  if (options.two_site_witnesses && n >= 2) {
    RegisterShape pair{2, shape.d};
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        int keep[] = {v, w};
        ComplexMatrix dvw = partial_trace(delta, shape, keep);
        ComplexMatrix sgn = matrix_function(dvw, [](double x) {
          return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
        });
        double lip = std::max(lipschitz_surrogate_at(sgn, pair, 0),
                              lipschitz_surrogate_at(sgn, pair, 1));
        if (lip <= 0.0) continue;
        double val = trace_norm_hermitian(dvw) / lip;
        if (val > out.lower) {
          out.lower = val;
          out.lower_witness = "two-site";
        }
      }
  }

  if (shape.d == 2) {
    ClassicalW1Result c = w1_classical(measure_distribution(rho), measure_distribution(sigma));
    out.classical_exact = c.value;
    if (c.dual_value > out.lower) {
      out.lower = c.dual_value;
      out.lower_witness = "diagonal";
    }
  }
  return out;
}

SymmetricConcentrationReport symmetric_concentration_check(const MeasuredDistribution& mu,
                                                           const std::vector<std::uint64_t>& a,
                                                           const std::vector<std::uint64_t>& b,
                                                           double poincare_constant) {
  if (a.empty() || b.empty()) throw ValidationError("sets must be non-empty");
  if (poincare_constant < 0.0) throw ValidationError("Poincare constant must be non-negative");
  SymmetricConcentrationReport r;
  r.mass_a = mu.mass(a);
  r.mass_b = mu.mass(b);
  if (r.mass_a <= 0.0 || r.mass_b <= 0.0)
    throw DomainError("a set carries zero probability; the bound is vacuous");
  int dist = std::numeric_limits<int>::max();
  for (auto x : a)
    for (auto y : b) dist = std::min(dist, hamming_distance(x, y));
  return symmetric_concentration_bound(mu.shape.n, dist, r.mass_a, r.mass_b, poincare_constant);
}

SymmetricConcentrationReport symmetric_concentration_bound(int n, int hamming_distance,
                                                           double mass_a, double mass_b,
                                                           double poincare_constant) {
  if (poincare_constant < 0.0) throw ValidationError("Poincare constant must be non-negative");
  if (n < 1 || hamming_distance < 0) throw ValidationError("need n >= 1 and d_H >= 0");
  if (mass_a <= 0.0 || mass_b <= 0.0)
    throw DomainError("a set carries zero probability; the bound is vacuous");
  SymmetricConcentrationReport r;
  r.hamming_distance = hamming_distance;
  r.mass_a = mass_a;
  r.mass_b = mass_b;
  r.rhs = std::sqrt(poincare_constant * n) * (1.0 / std::sqrt(mass_a) + 1.0 / std::sqrt(mass_b));
  r.passed = r.hamming_distance <= r.rhs;
  return r;
}

double polylog_neg(int k, double z) {
  if (k < 0) throw ValidationError("polylog order must satisfy k >= 0");
  if (!(z > 0.0 && z < 1.0)) throw ValidationError("polylog argument must lie in (0, 1)");
  const double peak = k / -std::log(z);
  double sum = 0.0;
  for (long m = 1;; ++m) {
    double term = std::pow(static_cast<double>(m), k) * std::pow(z, static_cast<double>(m));
    sum += term;
    if (m > peak && term < 1e-15 * std::max(1.0, sum)) break;
    if (m > 100000000) throw ConvergenceError("polylog series did not converge");
  }
  return sum;
}

}  // namespace qlimits
