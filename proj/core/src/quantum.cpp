#include "qlimits/quantum.hpp"

#include <cmath>
#include <numeric>

#include "qlimits/graph.hpp"

namespace qlimits {

namespace {

void check_matrix_shape(const RegisterShape& shape, const ComplexMatrix& m) {
  shape.validate();
  if (m.rows() != shape.dim() || m.cols() != shape.dim())
    throw ValidationError("matrix dimension does not match register shape");
}

}  // namespace

DensityMatrix::DensityMatrix(RegisterShape shape, ComplexMatrix matrix, const Tolerances& tol)
    : shape_(shape), m_(std::move(matrix)) {
  check_matrix_shape(shape_, m_);
  require_hermitian(m_, tol);
  m_ = 0.5 * (m_ + m_.adjoint());
  if (std::abs(m_.trace().real() - 1.0) > tol.trace)
    throw ValidationError("density matrix trace differs from 1");
  if (eigvals_hermitian(m_, tol).minCoeff() < -tol.positivity)
    throw ValidationError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::trusted(RegisterShape shape, ComplexMatrix matrix,
                                     const Tolerances& tol) {
  check_matrix_shape(shape, matrix);
  DensityMatrix out;
  out.shape_ = shape;
  out.m_ = 0.5 * (matrix + matrix.adjoint());
  if (std::abs(out.m_.trace().real() - 1.0) > tol.trace)
    throw ValidationError("density matrix trace differs from 1");
  return out;
}

double DensityMatrix::min_eigenvalue() const { return eigvals_hermitian(m_).minCoeff(); }

double DensityMatrix::purity() const { return (m_.cwiseAbs2()).sum(); }

double DensityMatrix::moment(int k) const {
  if (k < 1) throw ValidationError("moment order must be positive");
  RealVector ev = eigvals_hermitian(m_);
  double acc = 0.0;
  for (double x : ev) acc += std::pow(std::max(x, 0.0), k);
  return acc;
}

DensityMatrix DensityMatrix::marginal(std::span<const int> keep) const {
  ComplexMatrix r = partial_trace(m_, shape_, keep);
  return trusted(RegisterShape{static_cast<int>(keep.size()), shape_.d}, r);
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
  if (other.shape_.d != shape_.d) throw ValidationError("local dimensions differ");
  return trusted(RegisterShape{shape_.n + other.shape_.n, shape_.d}, kron(m_, other.m_));
}

Observable::Observable(RegisterShape shape, ComplexMatrix matrix, const Tolerances& tol)
    : shape_(shape), m_(std::move(matrix)) {
  check_matrix_shape(shape_, m_);
  require_hermitian(m_, tol);
  m_ = 0.5 * (m_ + m_.adjoint());
  ComplexMatrix off = m_;
  off.diagonal().setZero();
  diagonal_ = off.size() == 0 || off.cwiseAbs().maxCoeff() < tol.diagonal;
}

Observable Observable::from_diagonal(RegisterShape shape, const RealVector& diag) {
  return Observable(shape, diag.cast<Complex>().asDiagonal().toDenseMatrix());
}

double Observable::expectation(const DensityMatrix& rho) const {
  if (!(rho.shape() == shape_)) throw ValidationError("observable and state shapes differ");
  return (rho.matrix().cwiseProduct(m_.transpose())).sum().real();
}

Observable Observable::shifted(double c) const {
  ComplexMatrix m = m_;
  m.diagonal().array() -= c;
  return Observable(shape_, m);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix identity(long long dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix tau_matrix(double q) {
  if (!(q > 0.0 && q < 1.0)) throw ValidationError("q must lie strictly between 0 and 1");
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = q;
  m(1, 1) = 1.0 - q;
  return m;
}

DensityMatrix basis_state(const RegisterShape& shape, std::uint64_t index) {
  shape.validate();
  if (index >= static_cast<std::uint64_t>(shape.dim()))
    throw ValidationError("basis index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(shape.dim(), shape.dim());
  m(index, index) = 1.0;
  return DensityMatrix::trusted(shape, m);
}

DensityMatrix pure_state(const RegisterShape& shape, const ComplexVector& psi) {
  shape.validate();
  if (psi.size() != shape.dim()) throw ValidationError("state vector has wrong dimension");
  double norm = psi.norm();
  if (norm == 0.0) throw ValidationError("zero state vector");
  ComplexVector u = psi / norm;
  return DensityMatrix::trusted(shape, u * u.adjoint());
}

DensityMatrix maximally_mixed(const RegisterShape& shape) {
  shape.validate();
  return DensityMatrix::trusted(shape, identity(shape.dim()) / static_cast<double>(shape.dim()));
}

DensityMatrix plus_state(int n) {
  RegisterShape shape = qubits(n);
  ComplexVector psi = ComplexVector::Constant(shape.dim(), 1.0);
  return pure_state(shape, psi);
}

DensityMatrix ghz_state(int n) {
  RegisterShape shape = qubits(n);
  ComplexVector psi = ComplexVector::Zero(shape.dim());
  psi(0) = psi(shape.dim() - 1) = 1.0;
  return pure_state(shape, psi);
}

DensityMatrix product_state(std::span<const ComplexMatrix> locals, int d) {
  if (locals.empty()) throw ValidationError("product state needs at least one factor");
  for (const auto& l : locals)
    if (l.rows() != d) throw ValidationError("local factor has wrong dimension");
  RegisterShape shape{static_cast<int>(locals.size()), d};
  shape.validate();
  return DensityMatrix(shape, kron_all(locals));
}

DensityMatrix product_state_tau(double q, int n) {
  tau_matrix(q);
  RegisterShape shape = qubits(n);
  ComplexMatrix m = ComplexMatrix::Zero(shape.dim(), shape.dim());
  for (long long i = 0; i < shape.dim(); ++i) {
    int ones = hamming_weight(static_cast<std::uint64_t>(i));
    m(i, i) = std::pow(q, n - ones) * std::pow(1.0 - q, ones);
  }
  return DensityMatrix::trusted(shape, m);
}

ComplexVector random_state_vector(long long dim, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(dim);
  for (long long i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

DensityMatrix random_pure_state(const RegisterShape& shape, Rng& rng) {
  shape.validate();
  return pure_state(shape, random_state_vector(shape.dim(), rng));
}

DensityMatrix random_density_matrix(const RegisterShape& shape, Rng& rng, int rank) {
  shape.validate();
  const long long dim = shape.dim();
  if (rank <= 0 || rank > dim) rank = static_cast<int>(dim);
  std::normal_distribution<double> g;
  ComplexMatrix a(dim, rank);
  for (long long i = 0; i < dim; ++i)
    for (int j = 0; j < rank; ++j) a(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix m = a * a.adjoint();
  m /= m.trace().real();
  return DensityMatrix::trusted(shape, m);
}

DensityMatrix random_product_state(const RegisterShape& shape, Rng& rng) {
  shape.validate();
  std::vector<ComplexMatrix> locals;
  RegisterShape one{1, shape.d};
  for (int v = 0; v < shape.n; ++v) locals.push_back(random_density_matrix(one, rng).matrix());
  return DensityMatrix::trusted(shape, kron_all(locals));
}

ComplexMatrix random_unitary(long long dim, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix z(dim, dim);
  for (long long i = 0; i < dim; ++i)
    for (long long j = 0; j < dim; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long long j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

ComplexMatrix random_hermitian(long long dim, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix z(dim, dim);
  for (long long i = 0; i < dim; ++i)
    for (long long j = 0; j < dim; ++j) z(i, j) = Complex(g(rng), g(rng));
  return 0.5 * (z + z.adjoint());
}

ComplexMatrix random_projector(long long dim, int rank, Rng& rng) {
  if (rank < 0 || rank > dim) throw ValidationError("projector rank out of range");
  ComplexMatrix u = random_unitary(dim, rng);
  ComplexMatrix v = u.leftCols(rank);
  return v * v.adjoint();
}

KrausSet random_channel(int d, int outputs, Rng& rng) {
  if (outputs < 1) throw ValidationError("channel needs at least one Kraus operator");
  ComplexMatrix u = random_unitary(static_cast<long long>(d) * outputs, rng);
  // Isometry V = U restricted to the first d columns; K_k are its row blocks.
  KrausSet out;
  for (int k = 0; k < outputs; ++k) out.push_back(u.block(k * d, 0, d, d));
  return out;
}

double MeasuredDistribution::mass(const std::vector<std::uint64_t>& set) const {
  double acc = 0.0;
  for (auto x : set) acc += probabilities.at(x);
  return acc;
}

std::string MeasuredDistribution::bitstring(std::uint64_t index) const {
  std::string out(shape.n, '0');
  for (int v = shape.n - 1; v >= 0; --v) {
    out[v] = static_cast<char>('0' + index % shape.d);
    index /= shape.d;
  }
  return out;
}

MeasuredDistribution make_distribution(const RegisterShape& shape, std::vector<double> probs,
                                       const Tolerances& tol) {
  shape.validate();
  if (static_cast<long long>(probs.size()) != shape.dim())
    throw ValidationError("distribution length does not match register");
  double total = 0.0;
  for (double& p : probs) {
    if (!std::isfinite(p) || p < -tol.positivity)
      throw ValidationError("distribution has a negative entry");
    p = std::max(p, 0.0);
    total += p;
  }
  if (std::abs(total - 1.0) > tol.trace) throw ValidationError("distribution does not sum to 1");
  return {shape, std::move(probs)};
}

MeasuredDistribution measure_distribution(const DensityMatrix& rho) {
  std::vector<double> probs(rho.dim());
  for (Eigen::Index i = 0; i < rho.dim(); ++i) probs[i] = rho.matrix()(i, i).real();
  return make_distribution(rho.shape(), std::move(probs));
}

}  // namespace qlimits
