#include "qlimits/lieb_robinson.hpp"

#include <algorithm>
#include <cmath>

namespace qlimits {

double coupling_bound(const std::vector<HamiltonianTerm>& terms) {
  double b = 0.0;
  for (const auto& term : terms) b = std::max(b, term.coupling.sup_abs());
  return b;
}

std::vector<HamiltonianTerm> xx_chain(int n, double coupling) {
  ComplexMatrix h = 0.25 * (kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()));
  std::vector<HamiltonianTerm> out;
  for (int i = 0; i + 1 < n; ++i)
    out.push_back({{i, i + 1}, h, PiecewiseLinear::constant(coupling)});
  return out;
}

namespace {

bool inside(const std::vector<int>& support, const std::vector<int>& region) {
  if (region.empty()) return true;
  return std::all_of(support.begin(), support.end(), [&](int v) {
    return std::find(region.begin(), region.end(), v) != region.end();
  });
}

ComplexMatrix hamiltonian_at(const std::vector<HamiltonianTerm>& terms,
                             const std::vector<int>& region, const RegisterShape& shape,
                             double t) {
  const auto dim = static_cast<Eigen::Index>(shape.dim());
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const auto& term : terms)
    if (inside(term.support, region)) h += term.coupling(t) * embed(term.h, term.support, shape);
  return h;
}

}  // namespace

ComplexMatrix evolution_unitary(const std::vector<HamiltonianTerm>& terms,
                                const std::vector<int>& region, const RegisterShape& shape,
                                double t, int steps_per_unit_time) {
  if (t < 0.0) throw ValidationError("evolution time must be non-negative");
  const auto dim = static_cast<Eigen::Index>(shape.dim());
  bool constant = std::all_of(terms.begin(), terms.end(),
                              [](const HamiltonianTerm& x) { return x.coupling.is_constant(); });
  if (t == 0.0) return ComplexMatrix::Identity(dim, dim);
  if (constant) return expm_hermitian(hamiltonian_at(terms, region, shape, 0.0), Complex(0, -t));
  const int steps = std::max(1, static_cast<int>(std::ceil(t * steps_per_unit_time)));
  const double dt = t / steps;
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (int k = 0; k < steps; ++k) {
    ComplexMatrix h = hamiltonian_at(terms, region, shape, (k + 0.5) * dt);
    u = expm_hermitian(h, Complex(0, -dt)) * u;
  }
  return u;
}

double lr_discrepancy(const std::vector<HamiltonianTerm>& terms, const std::vector<int>& a,
                      const std::vector<int>& b, double t, const DensityMatrix& rho,
                      int steps_per_unit_time) {
  const RegisterShape& shape = rho.shape();
  for (const auto& term : terms) {
    long long local = 1;
    for (int v : term.support) {
      if (v < 0 || v >= shape.n) throw ValidationError("term support out of range");
      local *= shape.d;
    }
    if (term.h.rows() != local) throw ValidationError("term dimension does not match support");
    require_hermitian(term.h);
    if (hermitian_operator_norm(term.h) > 0.5 + 1e-12)
      throw ValidationError("every interaction term needs operator norm at most 1/2");
  }
  if (a.empty()) throw ValidationError("region A must be non-empty");
  for (int v : a)
    if (std::find(b.begin(), b.end(), v) == b.end())
      throw ValidationError("region A must be contained in region B");
  for (int v : b)
    if (v < 0 || v >= shape.n) throw ValidationError("region B out of range");

  std::vector<int> all(shape.n);
  for (int v = 0; v < shape.n; ++v) all[v] = v;
  ComplexMatrix uv = evolution_unitary(terms, all, shape, t, steps_per_unit_time);
  ComplexMatrix ub = evolution_unitary(terms, b, shape, t, steps_per_unit_time);
  ComplexMatrix diff = uv * rho.matrix() * uv.adjoint() - ub * rho.matrix() * ub.adjoint();
  std::vector<int> keep(a.begin(), a.end());
  return trace_norm_hermitian(partial_trace(diff, shape, keep));
}

}  // namespace qlimits
