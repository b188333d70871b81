#pragma once

#include <optional>
#include <vector>

#include "qlimits/graph.hpp"
#include "qlimits/quantum.hpp"
#include "qlimits/schedule.hpp"

namespace qlimits {

// Noisy annealer: d rho/dt = rate * L(rho) + i[rho, f(t/T) H_X + g(t/T) H_I]
// with H_X = -sum X_i and L(rho) = sum_i (tau_q (x) tr_i rho - rho), which has
// unit spectral gap.
struct AnnealSchedule {
  double T = 1.0;
  PiecewiseLinear f = PiecewiseLinear::ramp_down();
  PiecewiseLinear g = PiecewiseLinear::ramp_up();
  double q = 0.5;
  double rate = 1.0;
};

struct LindbladOptions {
  int sample_every = 0;        // record every k steps (0: final state only)
  bool check_halving = false;  // rerun at dt/2 and compare final states
};

struct LindbladResult {
  DensityMatrix final_state;
  std::vector<double> times;
  std::vector<DensityMatrix> trajectory;
  double max_trace_drift = 0.0;
  std::optional<double> halving_difference;  // trace norm
};

// Fixed-step RK4. Requires dt <= T/100 (the step is shrunk to divide T
// evenly). Throws ConvergenceError when the trace drifts by more than 1e-6
// or, with check_halving, when halving dt moves the final state by more than
// 1e-6 in trace norm.
LindbladResult simulate_lindblad(const AnnealSchedule& schedule, const Observable& h_problem,
                                 const DensityMatrix& rho0, double dt,
                                 const LindbladOptions& options = {});
LindbladResult simulate_lindblad(const AnnealSchedule& schedule, const Graph& graph,
                                 const DensityMatrix& rho0, double dt,
                                 const LindbladOptions& options = {});

// -sum_i X_i on n qubits.
ComplexMatrix transverse_field(int n);

}  // namespace qlimits
