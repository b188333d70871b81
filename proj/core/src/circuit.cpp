#include "qlimits/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "qlimits/maxcut.hpp"

namespace qlimits {

void CircuitArchitecture::validate() const {
  shape.validate();
  for (const auto& layer : layers) {
    if (const auto* g = std::get_if<GateLayer>(&layer)) {
      if (g->supports.size() != g->channels.size())
        throw ValidationError("every gate support needs a channel");
      std::vector<char> used(shape.n, 0);
      for (std::size_t k = 0; k < g->supports.size(); ++k) {
        for (int v : g->supports[k]) {
          if (v < 0 || v >= shape.n) throw ValidationError("gate support out of range");
          if (used[v]) throw ValidationError("gate supports within a layer must be disjoint");
          used[v] = 1;
        }
        long long local = 1;
        for (std::size_t i = 0; i < g->supports[k].size(); ++i) local *= shape.d;
        if (g->channels[k].empty()) throw ValidationError("empty gate channel");
        for (const auto& K : g->channels[k])
          if (K.rows() != local || K.cols() != local)
            throw ValidationError("gate dimension does not match its support");
        require_trace_preserving(g->channels[k]);
      }
    } else {
      const auto& h = std::get<GraphHamiltonianLayer>(layer);
      if (!h.graph || !h.hamiltonian) throw ValidationError("Hamiltonian layer is incomplete");
      if (h.graph->n() != shape.n || !(h.hamiltonian->shape() == shape))
        throw ValidationError("Hamiltonian layer size does not match the register");
    }
  }
}

ComplexMatrix hadamard() {
  ComplexMatrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

ComplexMatrix rx(double beta) {
  ComplexMatrix m(2, 2);
  m << std::cos(beta), Complex(0, -std::sin(beta)), Complex(0, -std::sin(beta)), std::cos(beta);
  return m;
}

CircuitArchitecture build_qaoa_circuit(const QAOAConfig& cfg) {
  if (cfg.gamma.size() != cfg.beta.size())
    throw ValidationError("gamma and beta must both have length P");
  CircuitArchitecture c{qubits(cfg.graph.n()), {}};
  auto graph = std::make_shared<const Graph>(cfg.graph);
  auto h = std::make_shared<const Observable>(maxcut_hamiltonian(cfg.graph));
  for (int k = 0; k < cfg.P(); ++k) {
    c.layers.emplace_back(GraphHamiltonianLayer{graph, h, cfg.gamma[k]});
    GateLayer mix;
    for (int v = 0; v < cfg.graph.n(); ++v) {
      mix.supports.push_back({v});
      mix.channels.push_back({rx(cfg.beta[k])});
    }
    c.layers.emplace_back(std::move(mix));
  }
  return c;
}

CircuitArchitecture random_brickwork(int n, int depth, Rng& rng) {
  if (depth < 0) throw ValidationError("depth must be non-negative");
  CircuitArchitecture c{qubits(n), {}};
  for (int l = 0; l < depth; ++l) {
    GateLayer layer;
    for (int i = l % 2; i + 1 < n; i += 2) {
      layer.supports.push_back({i, i + 1});
      layer.channels.push_back({random_unitary(4, rng)});
    }
    c.layers.emplace_back(std::move(layer));
  }
  return c;
}

CircuitArchitecture ghz_circuit(int n) {
  CircuitArchitecture c{qubits(n), {}};
  c.layers.emplace_back(GateLayer{{{0}}, {{hadamard()}}});
  for (int v = 0; v + 1 < n; ++v) c.layers.emplace_back(GateLayer{{{v, v + 1}}, {{cnot()}}});
  return c;
}

namespace {

ComplexMatrix conjugate_local(const ComplexMatrix& k, std::span<const int> support,
                              const RegisterShape& shape, const ComplexMatrix& rho) {
  ComplexMatrix left = apply_local_left(k, support, shape, rho);
  return apply_local_left(k, support, shape, left.adjoint()).adjoint();
}

ComplexMatrix apply_hamiltonian_layer(const GraphHamiltonianLayer& h, const ComplexMatrix& rho,
                                      double sign) {
  // e^{i s gamma H} rho e^{-i s gamma H}.
  if (h.diagonal()) {
    RealVector e = h.hamiltonian->diagonal_values();
    const auto dim = rho.rows();
    ComplexVector phase(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      phase(i) = std::exp(Complex(0, sign * h.gamma * e(i)));
    return phase.asDiagonal() * rho * phase.conjugate().asDiagonal();
  }
  ComplexMatrix u = expm_hermitian(h.hamiltonian->matrix(), Complex(0, sign * h.gamma));
  return u * rho * u.adjoint();
}

}  // namespace

ComplexMatrix apply_layer(const CircuitLayer& layer, const RegisterShape& shape,
                          const ComplexMatrix& rho) {
  if (const auto* g = std::get_if<GateLayer>(&layer)) {
    ComplexMatrix out = rho;
    for (std::size_t k = 0; k < g->supports.size(); ++k) {
      const auto& ks = g->channels[k];
      const auto& sup = g->supports[k];
      if (ks.size() == 1) {
        out = conjugate_local(ks.front(), sup, shape, out);
      } else {
        out = apply_kraus(out, ks, sup, shape);
      }
    }
    return out;
  }
  return apply_hamiltonian_layer(std::get<GraphHamiltonianLayer>(layer), rho, 1.0);
}

ComplexMatrix apply_layer_adjoint(const CircuitLayer& layer, const RegisterShape& shape,
                                  const ComplexMatrix& o) {
  if (const auto* g = std::get_if<GateLayer>(&layer)) {
    ComplexMatrix out = o;
    for (std::size_t k = 0; k < g->supports.size(); ++k) {
      ComplexMatrix acc = ComplexMatrix::Zero(o.rows(), o.cols());
      for (const auto& K : g->channels[k])
        acc += conjugate_local(K.adjoint(), g->supports[k], shape, out);
      out = acc;
    }
    return out;
  }
  return apply_hamiltonian_layer(std::get<GraphHamiltonianLayer>(layer), o, -1.0);
}

SimulationResult simulate_circuit(const CircuitArchitecture& circuit,
                                  const std::optional<NoiseModel>& noise, const DensityMatrix& rho0,
                                  const SimulationOptions& options) {
  circuit.validate();
  if (!(rho0.shape() == circuit.shape))
    throw ValidationError("initial state does not match the circuit register");
  if (noise && noise->d() != circuit.shape.d)
    throw ValidationError("noise model acts on a different local dimension");
  ComplexMatrix rho = rho0.matrix();
  if (noise && options.noise_before_first_layer) rho = noise->apply_all(rho, circuit.shape);
  std::vector<DensityMatrix> trajectory;
  for (const auto& layer : circuit.layers) {
    rho = apply_layer(layer, circuit.shape, rho);
    if (noise) rho = noise->apply_all(rho, circuit.shape);
    if (options.record_trajectory)
      trajectory.push_back(DensityMatrix::trusted(circuit.shape, rho));
  }
  return {DensityMatrix::trusted(circuit.shape, rho), std::move(trajectory)};
}

ComplexMatrix circuit_unitary(const CircuitArchitecture& circuit) {
  circuit.validate();
  const auto dim = static_cast<Eigen::Index>(circuit.shape.dim());
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const auto& layer : circuit.layers) {
    if (const auto* g = std::get_if<GateLayer>(&layer)) {
      for (std::size_t k = 0; k < g->supports.size(); ++k) {
        if (g->channels[k].size() != 1)
          throw ValidationError("circuit contains a non-unitary channel");
        u = apply_local_left(g->channels[k].front(), g->supports[k], circuit.shape, u);
      }
    } else {
      const auto& h = std::get<GraphHamiltonianLayer>(layer);
      u = expm_hermitian(h.hamiltonian->matrix(), Complex(0, h.gamma)) * u;
    }
  }
  return u;
}

}  // namespace qlimits
