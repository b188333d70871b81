#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "qlimits/graph.hpp"
#include "qlimits/noise.hpp"
#include "qlimits/quantum.hpp"

namespace qlimits {

// One layer of gates on pairwise disjoint supports. Each channel is a Kraus
// set; a unitary gate is a single-element set.
struct GateLayer {
  std::vector<std::vector<int>> supports;
  std::vector<KrausSet> channels;
};

// e^{i gamma H} for a Hamiltonian generated by the edges of `graph`.
struct GraphHamiltonianLayer {
  std::shared_ptr<const Graph> graph;
  std::shared_ptr<const Observable> hamiltonian;
  double gamma = 0.0;
  bool diagonal() const { return hamiltonian->is_diagonal(); }
};

using CircuitLayer = std::variant<GateLayer, GraphHamiltonianLayer>;

struct CircuitArchitecture {
  RegisterShape shape;
  std::vector<CircuitLayer> layers;

  std::size_t depth() const { return layers.size(); }
  // Throws ValidationError on overlapping supports, out-of-range vertices or
  // channels whose dimension does not match their support.
  void validate() const;
};

struct QAOAConfig {
  Graph graph;
  std::vector<double> gamma;
  std::vector<double> beta;
  int P() const { return static_cast<int>(gamma.size()); }
};

// 2P layers: e^{i gamma_k H_I} with H_I the Max-Cut Hamiltonian, then
// single-qubit e^{-i beta_k X} (i.e. e^{i beta_k H_X} with H_X = -sum X).
CircuitArchitecture build_qaoa_circuit(const QAOAConfig& cfg);

// L layers of Haar-random two-qubit gates on (i, i+1), offset alternating
// between even and odd pairs. Open boundary.
CircuitArchitecture random_brickwork(int n, int depth, Rng& rng);

// Hadamard on vertex 0 followed by a CNOT chain; output is the GHZ state
// from |0...0>.
CircuitArchitecture ghz_circuit(int n);

ComplexMatrix hadamard();
ComplexMatrix cnot();
ComplexMatrix rx(double beta);  // e^{-i beta X}

struct SimulationOptions {
  bool noise_before_first_layer = false;
  bool record_trajectory = true;
};

struct SimulationResult {
  DensityMatrix final_state;
  std::vector<DensityMatrix> trajectory;  // state after every layer
};

SimulationResult simulate_circuit(const CircuitArchitecture& circuit,
                                  const std::optional<NoiseModel>& noise, const DensityMatrix& rho0,
                                  const SimulationOptions& options = {});

// Applies the layer's map to an operator (no noise).
ComplexMatrix apply_layer(const CircuitLayer& layer, const RegisterShape& shape,
                          const ComplexMatrix& rho);

// Heisenberg-picture layer: the adjoint map applied to an observable.
ComplexMatrix apply_layer_adjoint(const CircuitLayer& layer, const RegisterShape& shape,
                                  const ComplexMatrix& o);

// Full unitary of a circuit whose gate channels are all single unitaries.
ComplexMatrix circuit_unitary(const CircuitArchitecture& circuit);

}  // namespace qlimits
