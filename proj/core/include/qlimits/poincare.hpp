#pragma once

#include <string>
#include <vector>

#include "qlimits/circuit.hpp"
#include "qlimits/graph.hpp"

namespace qlimits {

struct LightConeTable {
  std::vector<std::vector<int>> per_vertex;  // forward light-cone I_v
  int i_max = 0;
};

// Vertices reachable from `seed` through layers first_layer..L-1. Gate layers
// merge any support that meets the set; Hamiltonian layers add the graph
// neighbourhood.
std::vector<int> forward_reach(const CircuitArchitecture& arch, std::vector<int> seed,
                               std::size_t first_layer);

LightConeTable light_cone(const CircuitArchitecture& arch);

// |I(e, m)|: size of the light-cone of set e through the last m layers.
int light_cone_size(const CircuitArchitecture& arch, const std::vector<int>& e, std::size_t m);

enum class PoincareSetting { noiseless, noisy, continuous };

const char* to_string(PoincareSetting s);

struct PoincareConstant {
  double value = 0.0;
  PoincareSetting setting = PoincareSetting::noiseless;
  std::string provenance;
};

// 4 I_max^2.
PoincareConstant poincare_noiseless(const CircuitArchitecture& arch);
// 4 (I_max^2 + max_l |E_l| / n * sum_l max_{e in E_l} |I(e, L - l)|^2). A
// Hamiltonian layer contributes its edge set as E_l.
PoincareConstant poincare_noisy(const CircuitArchitecture& arch);

struct InteractionGraphParams {
  int D = 2;       // max degree
  int delta = 1;   // spatial dimension
  double M = 1.0;  // |S_e(k)| <= M k^(delta-1)
  double b = 1.0;  // max interaction strength
  double velocity() const;  // e b (2D - 1)
  void validate() const;
};

// Sorted BFS distances d(1) <= ... <= d(n) from `root`; d(1) = 0.
std::vector<int> distance_table(const Graph& g, int root);

// 4 (2(i0 - 1) + 4M/(2D-1) sum_{i >= i0} d(i)^(delta-1) e^{v t - d(i)})^2
// with i0 the first index such that d(i) >= 2 delta - 1.
PoincareConstant poincare_continuous_exact(const InteractionGraphParams& p, double t,
                                           const std::vector<int>& distances);

struct ContinuousConstants {
  double c0 = 0.0;  // 64 M delta^delta
  double c1 = 0.0;  // 64 M / (2D - 1) Li_{-2(delta-1)}(e^{-1})
};

ContinuousConstants continuous_constants(const InteractionGraphParams& p);

// (c0 + c1 e^{v t})^2.
PoincareConstant poincare_continuous_simple(const InteractionGraphParams& p, double t);

}  // namespace qlimits
