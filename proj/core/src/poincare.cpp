#include "qlimits/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qlimits/transport.hpp"

namespace qlimits {

std::vector<int> forward_reach(const CircuitArchitecture& arch, std::vector<int> seed,
                               std::size_t first_layer) {
  const int n = arch.shape.n;
  std::vector<char> in(n, 0);
  for (int v : seed) {
    if (v < 0 || v >= n) throw ValidationError("vertex out of range");
    in[v] = 1;
  }
  for (std::size_t l = first_layer; l < arch.layers.size(); ++l) {
    const auto& layer = arch.layers[l];
    if (const auto* g = std::get_if<GateLayer>(&layer)) {
      for (const auto& sup : g->supports) {
        bool hit = std::any_of(sup.begin(), sup.end(), [&](int v) { return in[v] != 0; });
        if (hit)
          for (int v : sup) in[v] = 1;
      }
    } else {
      const auto& h = std::get<GraphHamiltonianLayer>(layer);
      std::vector<int> cur;
      for (int v = 0; v < n; ++v)
        if (in[v]) cur.push_back(v);
      for (int v : h.graph->closed_neighborhood(cur)) in[v] = 1;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

LightConeTable light_cone(const CircuitArchitecture& arch) {
  arch.validate();
  LightConeTable t;
  for (int v = 0; v < arch.shape.n; ++v) {
    t.per_vertex.push_back(forward_reach(arch, {v}, 0));
    t.i_max = std::max(t.i_max, static_cast<int>(t.per_vertex.back().size()));
  }
  return t;
}

int light_cone_size(const CircuitArchitecture& arch, const std::vector<int>& e, std::size_t m) {
  if (m > arch.layers.size()) throw ValidationError("more layers requested than the circuit has");
  return static_cast<int>(forward_reach(arch, e, arch.layers.size() - m).size());
}

const char* to_string(PoincareSetting s) {
  switch (s) {
    case PoincareSetting::noiseless:
      return "noiseless";
    case PoincareSetting::noisy:
      return "noisy";
    case PoincareSetting::continuous:
      return "continuous";
  }
  return "unknown";
}

PoincareConstant poincare_noiseless(const CircuitArchitecture& arch) {
  double i = light_cone(arch).i_max;
  return {4.0 * i * i, PoincareSetting::noiseless, "poincare.noiseless.light_cone"};
}

PoincareConstant poincare_noisy(const CircuitArchitecture& arch) {
  const double i = light_cone(arch).i_max;
  const std::size_t L = arch.layers.size();
  std::size_t max_sets = 0;
  double sum = 0.0;
  for (std::size_t l = 0; l < L; ++l) {
    std::vector<std::vector<int>> sets;
    if (const auto* g = std::get_if<GateLayer>(&arch.layers[l])) {
      sets = g->supports;
    } else {
      for (auto [a, b] : std::get<GraphHamiltonianLayer>(arch.layers[l]).graph->edges())
        sets.push_back({a, b});
    }
    max_sets = std::max(max_sets, sets.size());
    // Layer index l (0-based) is layer l+1 of L; L - (l+1) layers follow it.
    double worst = 0.0;
    for (const auto& e : sets) {
      double s = light_cone_size(arch, e, L - (l + 1));
      worst = std::max(worst, s * s);
    }
    sum += worst;
  }
  double value = 4.0 * (i * i + static_cast<double>(max_sets) / arch.shape.n * sum);
  return {value, PoincareSetting::noisy, "poincare.noisy.layer_light_cones"};
}

double InteractionGraphParams::velocity() const { return std::numbers::e * b * (2.0 * D - 1.0); }

void InteractionGraphParams::validate() const {
  if (D < 1) throw ValidationError("max degree must be at least 1");
  if (delta < 1) throw ValidationError("spatial dimension must be at least 1");
  if (!(M > 0.0)) throw ValidationError("sphere-growth constant M must be positive");
  if (!(b > 0.0)) throw ValidationError("interaction strength b must be positive");
}

std::vector<int> distance_table(const Graph& g, int root) {
  std::vector<int> d = g.distances_from(root);
  if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; }))
    throw ValidationError("graph is disconnected from the root");
  std::sort(d.begin(), d.end());
  return d;
}

PoincareConstant poincare_continuous_exact(const InteractionGraphParams& p, double t,
                                           const std::vector<int>& distances) {
  p.validate();
  if (distances.empty()) throw ValidationError("exact continuous mode needs a distance table");
  if (t < 0.0) throw ValidationError("time must be non-negative");
  const double v = p.velocity();
  const int threshold = 2 * p.delta - 1;
  std::size_t i0 = distances.size();
  for (std::size_t i = 0; i < distances.size(); ++i)
    if (distances[i] >= threshold) {
      i0 = i;
      break;
    }
  double sum = 0.0;
  for (std::size_t i = i0; i < distances.size(); ++i) {
    double d = distances[i];
    sum += std::pow(d, p.delta - 1) * std::exp(v * t - d);
  }
  // i0 is 0-based here, so the 1-based (i0 - 1) is just i0.
  double inner = 2.0 * static_cast<double>(i0) + 4.0 * p.M / (2.0 * p.D - 1.0) * sum;
  return {4.0 * inner * inner, PoincareSetting::continuous, "poincare.continuous.distance_sum"};
}

ContinuousConstants continuous_constants(const InteractionGraphParams& p) {
  p.validate();
  ContinuousConstants c;
  c.c0 = 64.0 * p.M * std::pow(static_cast<double>(p.delta), p.delta);
  c.c1 = 64.0 * p.M / (2.0 * p.D - 1.0) * polylog_neg(2 * (p.delta - 1), std::exp(-1.0));
  return c;
}

PoincareConstant poincare_continuous_simple(const InteractionGraphParams& p, double t) {
  if (t < 0.0) throw ValidationError("time must be non-negative");
  ContinuousConstants c = continuous_constants(p);
  double root = c.c0 + c.c1 * std::exp(p.velocity() * t);
  return {root * root, PoincareSetting::continuous, "poincare.continuous.polylog"};
}

}  // namespace qlimits
