#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qlimits/numerics.hpp"

namespace qlimits {

using Rng = std::mt19937_64;

class DensityMatrix {
 public:
  // Validates Hermiticity, unit trace and positivity.
  DensityMatrix(RegisterShape shape, ComplexMatrix matrix,
                const Tolerances& tol = default_tolerances());

  // Skips the positivity eigendecomposition; used for outputs of maps that
  // are known to be CPTP. Hermitizes and checks the trace only.
  static DensityMatrix trusted(RegisterShape shape, ComplexMatrix matrix,
                               const Tolerances& tol = default_tolerances());

  const RegisterShape& shape() const { return shape_; }
  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  int n() const { return shape_.n; }

  double min_eigenvalue() const;
  double purity() const;  // tr[rho^2]
  double moment(int k) const;  // tr[rho^k]

  DensityMatrix marginal(std::span<const int> keep) const;
  DensityMatrix tensor(const DensityMatrix& other) const;

 private:
  DensityMatrix() = default;
  RegisterShape shape_;
  ComplexMatrix m_;
};

class Observable {
 public:
  Observable(RegisterShape shape, ComplexMatrix matrix,
             const Tolerances& tol = default_tolerances());
  static Observable from_diagonal(RegisterShape shape, const RealVector& diag);

  const RegisterShape& shape() const { return shape_; }
  const ComplexMatrix& matrix() const { return m_; }
  bool is_diagonal() const { return diagonal_; }
  RealVector diagonal_values() const { return m_.diagonal().real(); }

  double expectation(const DensityMatrix& rho) const;
  Observable shifted(double c) const;  // O - c I

 private:
  RegisterShape shape_;
  ComplexMatrix m_;
  bool diagonal_ = false;
};

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity(long long dim);

// tau_q = q|0><0| + (1-q)|1><1|.
ComplexMatrix tau_matrix(double q);

DensityMatrix basis_state(const RegisterShape& shape, std::uint64_t index);
DensityMatrix pure_state(const RegisterShape& shape, const ComplexVector& psi);
DensityMatrix maximally_mixed(const RegisterShape& shape);
DensityMatrix plus_state(int n);
DensityMatrix ghz_state(int n);
DensityMatrix product_state(std::span<const ComplexMatrix> locals, int d = 2);
// Throws ValidationError unless 0 < q < 1.
DensityMatrix product_state_tau(double q, int n);

ComplexVector random_state_vector(long long dim, Rng& rng);
DensityMatrix random_pure_state(const RegisterShape& shape, Rng& rng);
// Random mixed state of the given rank (0 = full rank) from a Ginibre matrix.
DensityMatrix random_density_matrix(const RegisterShape& shape, Rng& rng, int rank = 0);
// Product of independent random single-qudit mixed states.
DensityMatrix random_product_state(const RegisterShape& shape, Rng& rng);
ComplexMatrix random_unitary(long long dim, Rng& rng);
ComplexMatrix random_hermitian(long long dim, Rng& rng);
// Projector onto a Haar-random subspace of the given rank.
ComplexMatrix random_projector(long long dim, int rank, Rng& rng);
// Random CPTP map on d x d matrices with `outputs` Kraus operators.
KrausSet random_channel(int d, int outputs, Rng& rng);

struct MeasuredDistribution {
  RegisterShape shape;
  std::vector<double> probabilities;  // indexed by basis index

  double probability(std::uint64_t index) const { return probabilities.at(index); }
  double mass(const std::vector<std::uint64_t>& set) const;
  std::string bitstring(std::uint64_t index) const;
};

// Validates that probabilities are non-negative and sum to one.
MeasuredDistribution make_distribution(const RegisterShape& shape, std::vector<double> probs,
                                       const Tolerances& tol = default_tolerances());
MeasuredDistribution measure_distribution(const DensityMatrix& rho);

}  // namespace qlimits
