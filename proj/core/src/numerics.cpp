#include "qlimits/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace qlimits {

long long RegisterShape::dim() const {
  long long out = 1;
  for (int i = 0; i < n; ++i) out *= d;
  return out;
}

void RegisterShape::validate() const {
  if (n < 1) throw ValidationError("register needs at least one qudit");
  if (d < 2) throw ValidationError("local dimension must be at least 2");
  double bits = n * std::log2(static_cast<double>(d));
  if (bits > max_qubits() + 1e-9) {
    std::ostringstream msg;
    msg << "register of " << n << " qudits (d=" << d << ") exceeds the cap of " << max_qubits()
        << " qubits; raise QLIMITS_MAX_QUBITS";
    throw SizeError(msg.str());
  }
}

RegisterShape qubits(int n) {
  RegisterShape s{n, 2};
  s.validate();
  return s;
}

namespace {

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("matrix must be square");
  if (!a.allFinite()) throw ValidationError("matrix has non-finite entries");
}

void check_shape(const ComplexMatrix& a, const RegisterShape& shape) {
  if (a.rows() != shape.dim() || a.cols() != shape.dim())
    throw ValidationError("matrix dimension does not match register shape");
}

void check_sites(std::span<const int> sites, const RegisterShape& shape) {
  std::vector<int> seen;
  for (int s : sites) {
    if (s < 0 || s >= shape.n) throw ValidationError("vertex index out of range");
    if (std::find(seen.begin(), seen.end(), s) != seen.end())
      throw ValidationError("vertex subset has duplicates");
    seen.push_back(s);
  }
}

long long ipow(long long base, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Offset in the full register of each local basis index over `sites`
// (sites[0] most significant locally).
std::vector<long long> local_offsets(std::span<const int> sites, const RegisterShape& shape) {
  const int k = static_cast<int>(sites.size());
  const long long local_dim = ipow(shape.d, k);
  std::vector<long long> stride(k);
  for (int j = 0; j < k; ++j) stride[j] = ipow(shape.d, shape.n - 1 - sites[j]);
  std::vector<long long> out(local_dim);
  for (long long a = 0; a < local_dim; ++a) {
    long long rem = a, off = 0;
    for (int j = k - 1; j >= 0; --j) {
      off += (rem % shape.d) * stride[j];
      rem /= shape.d;
    }
    out[a] = off;
  }
  return out;
}

std::vector<int> complement(std::span<const int> sites, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (std::find(sites.begin(), sites.end(), v) == sites.end()) out.push_back(v);
  return out;
}

}  // namespace

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  double scale = std::max(1.0, max_abs(a));
  return max_abs(a - a.adjoint()) <= tol * scale;
}

void require_hermitian(const ComplexMatrix& a, const Tolerances& tol) {
  require_square(a);
  if (!is_hermitian(a, tol.hermiticity)) throw ValidationError("matrix is not Hermitian");
}

Spectrum eig_hermitian(const ComplexMatrix& a, const Tolerances& tol) {
  require_hermitian(a, tol);
  ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigvals_hermitian(const ComplexMatrix& a, const Tolerances& tol) {
  require_hermitian(a, tol);
  ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  return solver.eigenvalues();
}

ComplexMatrix matrix_function(const ComplexMatrix& a, const std::function<double(double)>& f,
                              const Tolerances& tol) {
  Spectrum s = eig_hermitian(a, tol);
  RealVector fl(s.values.size());
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    fl[i] = f(s.values[i]);
    if (!std::isfinite(fl[i])) throw DomainError("function undefined at an eigenvalue");
  }
  return s.vectors * fl.cast<Complex>().asDiagonal() * s.vectors.adjoint();
}

ComplexMatrix matrix_power(const ComplexMatrix& a, double p, const Tolerances& tol) {
  const double cutoff = tol.pseudo_inverse_cutoff;
  const bool integral = std::floor(p) == p;
  return matrix_function(
      a,
      [=](double x) {
        if (x <= cutoff) {
          if (x < -cutoff && !integral) return std::numeric_limits<double>::quiet_NaN();
          if (p <= 0.0 || !integral) return 0.0;
        }
        return std::pow(x, p);
      },
      tol);
}

ComplexMatrix support_projector(const ComplexMatrix& a, const Tolerances& tol) {
  const double cutoff = tol.pseudo_inverse_cutoff;
  return matrix_function(a, [=](double x) { return x > cutoff ? 1.0 : 0.0; }, tol);
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, Complex factor) {
  Spectrum s = eig_hermitian(h);
  ComplexVector e(s.values.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) e[i] = std::exp(factor * s.values[i]);
  return s.vectors * e.asDiagonal() * s.vectors.adjoint();
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

double hermitian_operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return eigvals_hermitian(a).cwiseAbs().maxCoeff();
}

double trace_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().sum();
}

double trace_norm_hermitian(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return eigvals_hermitian(a).cwiseAbs().sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, const RegisterShape& shape,
                            std::span<const int> keep) {
  check_shape(a, shape);
  check_sites(keep, shape);
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> traced = complement(kept, shape.n);
  auto ko = local_offsets(kept, shape);
  auto to = local_offsets(traced, shape);
  const auto kd = static_cast<Eigen::Index>(ko.size());
  ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
  for (Eigen::Index i = 0; i < kd; ++i)
    for (Eigen::Index j = 0; j < kd; ++j) {
      Complex acc = 0.0;
      for (long long r : to) acc += a(ko[i] + r, ko[j] + r);
      out(i, j) = acc;
    }
  return out;
}

ComplexMatrix trace_out(const ComplexMatrix& a, const RegisterShape& shape,
                        std::span<const int> traced) {
  check_sites(traced, shape);
  std::vector<int> keep = complement(traced, shape.n);
  if (keep.empty()) {
    check_shape(a, shape);
    return ComplexMatrix::Constant(1, 1, a.trace());
  }
  return partial_trace(a, shape, keep);
}

ComplexMatrix apply_local_left(const ComplexMatrix& op, std::span<const int> support,
                               const RegisterShape& shape, const ComplexMatrix& m) {
  if (m.rows() != shape.dim()) throw ValidationError("operand dimension does not match register");
  check_sites(support, shape);
  auto so = local_offsets(support, shape);
  if (op.rows() != static_cast<Eigen::Index>(so.size()) || op.cols() != op.rows())
    throw ValidationError("local operator dimension does not match its support");
  std::vector<int> rest(complement(support, shape.n));
  auto ro = local_offsets(rest, shape);
  const auto k = static_cast<Eigen::Index>(so.size());
  ComplexMatrix out(m.rows(), m.cols());
  ComplexMatrix block(k, m.cols());
  for (long long base : ro) {
    for (Eigen::Index a = 0; a < k; ++a) block.row(a) = m.row(base + so[a]);
    ComplexMatrix res = op * block;
    for (Eigen::Index a = 0; a < k; ++a) out.row(base + so[a]) = res.row(a);
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, std::span<const int> support,
                    const RegisterShape& shape) {
  const auto dim = static_cast<Eigen::Index>(shape.dim());
  return apply_local_left(op, support, shape, ComplexMatrix::Identity(dim, dim));
}

ComplexMatrix extend_with_identity(const ComplexMatrix& x, std::span<const int> sites,
                                   const RegisterShape& shape) {
  check_sites(sites, shape);
  std::vector<int> s(sites.begin(), sites.end());
  std::sort(s.begin(), s.end());
  auto so = local_offsets(s, shape);
  auto ro = local_offsets(complement(s, shape.n), shape);
  const auto k = static_cast<Eigen::Index>(so.size());
  if (x.rows() != k || x.cols() != k)
    throw ValidationError("operator dimension does not match its sites");
  const auto dim = static_cast<Eigen::Index>(shape.dim());
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (long long base : ro)
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = 0; b < k; ++b) out(base + so[a], base + so[b]) = x(a, b);
  return out;
}

void require_trace_preserving(const KrausSet& kraus, const Tolerances& tol) {
  if (kraus.empty()) throw ValidationError("empty Kraus set");
  const auto k = kraus.front().rows();
  ComplexMatrix acc = ComplexMatrix::Zero(k, k);
  for (const auto& K : kraus) {
    if (K.rows() != k || K.cols() != k) throw ValidationError("Kraus operators differ in size");
    acc += K.adjoint() * K;
  }
  if (max_abs(acc - ComplexMatrix::Identity(k, k)) > tol.kraus_completeness)
    throw ValidationError("Kraus set is not trace preserving");
}

ComplexMatrix apply_kraus(const ComplexMatrix& rho, const KrausSet& kraus,
                          std::span<const int> support, const RegisterShape& shape,
                          const Tolerances& tol) {
  require_trace_preserving(kraus, tol);
  check_shape(rho, shape);
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& K : kraus) {
    ComplexMatrix left = apply_local_left(K, support, shape, rho);
    out += apply_local_left(K, support, shape, left.adjoint()).adjoint();
  }
  return 0.5 * (out + out.adjoint());
}

LinearMap kraus_map(KrausSet kraus) {
  return [k = std::move(kraus)](const ComplexMatrix& x) {
    ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
    for (const auto& K : k) out += K * x * K.adjoint();
    return out;
  };
}

std::vector<ComplexMatrix> hermitian_operator_basis(int d) {
  if (d < 2) throw ValidationError("local dimension must be at least 2");
  std::vector<ComplexMatrix> out;
  out.push_back(ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  const double r2 = 1.0 / std::sqrt(2.0);
  // Symmetric and antisymmetric off-diagonal pairs.
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix s = ComplexMatrix::Zero(d, d);
      s(j, k) = s(k, j) = r2;
      out.push_back(s);
      ComplexMatrix a = ComplexMatrix::Zero(d, d);
      a(j, k) = Complex(0, -r2);
      a(k, j) = Complex(0, r2);
      out.push_back(a);
    }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < l; ++j) diag(j, j) = 1.0;
    diag(l, l) = -static_cast<double>(l);
    out.push_back(diag / std::sqrt(static_cast<double>(l * (l + 1))));
  }
  return out;
}

ComplexMatrix superoperator_matrix(const LinearMap& channel, int d, const ComplexMatrix* weighting,
                                   const Tolerances& tol) {
  auto basis = hermitian_operator_basis(d);
  ComplexMatrix in_w, out_w;
  if (weighting != nullptr) {
    if (weighting->rows() != d) throw ValidationError("weighting state has wrong dimension");
    RealVector ev = eigvals_hermitian(*weighting, tol);
    if (ev.minCoeff() <= tol.pseudo_inverse_cutoff)
      throw DomainError("weighting state must be full rank");
    in_w = matrix_power(*weighting, 0.25, tol);
    out_w = matrix_power(*weighting, -0.25, tol);
  }
  const auto m = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix out(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    ComplexMatrix image = weighting ? ComplexMatrix(out_w * channel(in_w * basis[j] * in_w) * out_w)
                                    : channel(basis[j]);
    for (Eigen::Index i = 0; i < m; ++i) out(i, j) = (basis[i].adjoint() * image).trace();
  }
  return out;
}

}  // namespace qlimits
