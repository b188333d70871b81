#pragma once

// Dense complex linear algebra shared by every other module.
//
// Basis convention: a register of n qudits of local dimension d is indexed
// big-endian, i.e. vertex 0 is the most significant digit of the basis index.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "qlimits/config.hpp"

namespace qlimits {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// n qudits of local dimension d.
struct RegisterShape {
  int n = 1;
  int d = 2;

  long long dim() const;
  // Throws ValidationError on n < 1, d < 2 or a dimension above the cap.
  void validate() const;
  bool operator==(const RegisterShape&) const = default;
};

RegisterShape qubits(int n);

struct Spectrum {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // unitary, eigenvectors in columns
};

// Throws ValidationError when `a` is not square or not Hermitian within
// tol.hermiticity * max(1, max|a_ij|).
void require_hermitian(const ComplexMatrix& a, const Tolerances& tol = default_tolerances());
bool is_hermitian(const ComplexMatrix& a, double tol);

Spectrum eig_hermitian(const ComplexMatrix& a, const Tolerances& tol = default_tolerances());
RealVector eigvals_hermitian(const ComplexMatrix& a, const Tolerances& tol = default_tolerances());

// V diag(f(lambda)) V^dagger. Throws DomainError if f is not finite at an
// eigenvalue.
ComplexMatrix matrix_function(const ComplexMatrix& a, const std::function<double(double)>& f,
                              const Tolerances& tol = default_tolerances());

// A^p for positive semidefinite A. Eigenvalues at or below the
// pseudo-inverse cutoff map to 0 whenever p <= 0 or p is fractional;
// eigenvalues below -cutoff are a DomainError for non-integer p.
ComplexMatrix matrix_power(const ComplexMatrix& a, double p,
                           const Tolerances& tol = default_tolerances());

// Projector onto eigenvectors with eigenvalue above the cutoff.
ComplexMatrix support_projector(const ComplexMatrix& a,
                                const Tolerances& tol = default_tolerances());

ComplexMatrix expm_hermitian(const ComplexMatrix& h, Complex factor);

double operator_norm(const ComplexMatrix& a);  // largest singular value
double hermitian_operator_norm(const ComplexMatrix& a);
double trace_norm(const ComplexMatrix& a);
double trace_norm_hermitian(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

// Partial trace keeping `keep` (any order; output ordered ascending).
ComplexMatrix partial_trace(const ComplexMatrix& a, const RegisterShape& shape,
                            std::span<const int> keep);
// Partial trace over `traced`.
ComplexMatrix trace_out(const ComplexMatrix& a, const RegisterShape& shape,
                        std::span<const int> traced);

// (op acting on `support`, identity elsewhere) * m. `support` is ordered:
// op's first tensor factor acts on support[0].
ComplexMatrix apply_local_left(const ComplexMatrix& op, std::span<const int> support,
                               const RegisterShape& shape, const ComplexMatrix& m);

// Full-register matrix of `op` acting on `support`.
ComplexMatrix embed(const ComplexMatrix& op, std::span<const int> support,
                    const RegisterShape& shape);

// I_{complement} (x) x, where x lives on the ascending-ordered `sites`.
ComplexMatrix extend_with_identity(const ComplexMatrix& x, std::span<const int> sites,
                                   const RegisterShape& shape);

using KrausSet = std::vector<ComplexMatrix>;

// Throws ValidationError unless sum K^dagger K = I within tolerance.
void require_trace_preserving(const KrausSet& kraus,
                              const Tolerances& tol = default_tolerances());

// sum_k K rho K^dagger with every K acting on `support`.
ComplexMatrix apply_kraus(const ComplexMatrix& rho, const KrausSet& kraus,
                          std::span<const int> support, const RegisterShape& shape,
                          const Tolerances& tol = default_tolerances());

using LinearMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

LinearMap kraus_map(KrausSet kraus);

// Orthonormal Hermitian operator basis of d x d matrices under the
// Hilbert-Schmidt inner product: I/sqrt(d) first, then generalized Gell-Mann
// matrices scaled to unit norm. For d = 2 these are the Paulis over sqrt(2).
std::vector<ComplexMatrix> hermitian_operator_basis(int d);

// d^2 x d^2 matrix M_ij = tr[B_i^dagger Phi(B_j)] in the basis above. With a
// weighting state sigma, Phi is replaced by
// X -> sigma^{-1/4} Phi(sigma^{1/4} X sigma^{1/4}) sigma^{-1/4}.
ComplexMatrix superoperator_matrix(const LinearMap& channel, int d,
                                   const ComplexMatrix* weighting = nullptr,
                                   const Tolerances& tol = default_tolerances());

}  // namespace qlimits
