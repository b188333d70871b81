#include "qlimits/lindblad.hpp"

#include <cmath>
#include <sstream>

#include "qlimits/maxcut.hpp"
#include "qlimits/noise.hpp"

namespace qlimits {

ComplexMatrix transverse_field(int n) {
  RegisterShape shape = qubits(n);
  ComplexMatrix out = ComplexMatrix::Zero(shape.dim(), shape.dim());
  for (int v = 0; v < n; ++v) {
    int s[] = {v};
    out -= embed(pauli_x(), s, shape);
  }
  return out;
}

namespace {

struct Generator {
  RegisterShape shape;
  ComplexMatrix tau;
  ComplexMatrix hx;
  ComplexMatrix hi;
  const AnnealSchedule* s;

  ComplexMatrix operator()(double t, const ComplexMatrix& rho) const {
    ComplexMatrix out = -static_cast<double>(shape.n) * rho;
    for (int v = 0; v < shape.n; ++v) out += replace_site(rho, shape, v, tau);
    out *= s->rate;
    const double x = s->T > 0.0 ? t / s->T : 0.0;
    ComplexMatrix h = s->f(x) * hx + s->g(x) * hi;
    ComplexMatrix comm = rho * h - h * rho;
    out += Complex(0, 1) * comm;
    return out;
  }
};

struct RunOutput {
  ComplexMatrix final_state;
  std::vector<double> times;
  std::vector<ComplexMatrix> samples;
  double drift = 0.0;
};

RunOutput integrate(const Generator& gen, const ComplexMatrix& rho0, double T, long long steps,
                    int sample_every) {
  RunOutput out;
  ComplexMatrix rho = rho0;
  const double h = T / static_cast<double>(steps);
  for (long long k = 0; k < steps; ++k) {
    const double t = k * h;
    ComplexMatrix k1 = gen(t, rho);
    ComplexMatrix k2 = gen(t + 0.5 * h, rho + 0.5 * h * k1);
    ComplexMatrix k3 = gen(t + 0.5 * h, rho + 0.5 * h * k2);
    ComplexMatrix k4 = gen(t + h, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint());
    double drift = std::abs(rho.trace().real() - 1.0);
    out.drift = std::max(out.drift, drift);
    if (drift > 1e-6) {
      std::ostringstream msg;
      msg << "Lindblad step unstable: trace drift " << drift << " at t=" << t + h
          << "; reduce dt below " << h;
      throw ConvergenceError(msg.str());
    }
    if (sample_every > 0 && (k + 1) % sample_every == 0 && k + 1 < steps) {
      out.times.push_back((k + 1) * h);
      out.samples.push_back(rho);
    }
  }
  out.final_state = rho;
  return out;
}

}  // namespace

LindbladResult simulate_lindblad(const AnnealSchedule& schedule, const Observable& h_problem,
                                 const DensityMatrix& rho0, double dt,
                                 const LindbladOptions& options) {
  if (!(schedule.T >= 0.0)) throw ValidationError("annealing time must be non-negative");
  if (!(schedule.q > 0.0 && schedule.q < 1.0))
    throw ValidationError("q must lie strictly between 0 and 1");
  if (!(schedule.rate >= 0.0)) throw ValidationError("noise rate must be non-negative");
  if (!(rho0.shape() == h_problem.shape()) || rho0.shape().d != 2)
    throw ValidationError("state and problem Hamiltonian must share a qubit register");
  if (schedule.T == 0.0) return {rho0, {0.0}, {rho0}, 0.0, std::nullopt};
  if (!(dt > 0.0) || dt > schedule.T / 100.0 * (1.0 + 1e-12))
    throw ValidationError("dt must be positive and at most T/100");

  Generator gen{rho0.shape(), tau_matrix(schedule.q), transverse_field(rho0.n()),
                h_problem.matrix(), &schedule};
  const auto steps = static_cast<long long>(std::ceil(schedule.T / dt - 1e-9));
  RunOutput run = integrate(gen, rho0.matrix(), schedule.T, steps, options.sample_every);

  LindbladResult result{DensityMatrix::trusted(rho0.shape(), run.final_state), {0.0}, {rho0},
                        run.drift, std::nullopt};
  for (std::size_t i = 0; i < run.samples.size(); ++i) {
    result.times.push_back(run.times[i]);
    result.trajectory.push_back(DensityMatrix::trusted(rho0.shape(), run.samples[i]));
  }
  result.times.push_back(schedule.T);
  result.trajectory.push_back(result.final_state);

  if (options.check_halving) {
    RunOutput fine = integrate(gen, rho0.matrix(), schedule.T, 2 * steps, 0);
    double diff = trace_norm_hermitian(fine.final_state - run.final_state);
    result.halving_difference = diff;
    if (diff > 1e-6) {
      std::ostringstream msg;
      msg << "halving dt changed the final state by " << diff << " in trace norm; reduce dt";
      throw ConvergenceError(msg.str());
    }
  }
  return result;
}

LindbladResult simulate_lindblad(const AnnealSchedule& schedule, const Graph& graph,
                                 const DensityMatrix& rho0, double dt,
                                 const LindbladOptions& options) {
  return simulate_lindblad(schedule, maxcut_hamiltonian(graph), rho0, dt, options);
}

}  // namespace qlimits
