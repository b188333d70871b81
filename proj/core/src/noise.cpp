#include "qlimits/noise.hpp"

#include <cmath>

namespace qlimits {

namespace {

long long ipow(long long b, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("noise parameter p must lie in [0, 1]");
}

// sqrt(p lambda_j) |j><k| for every j, k, plus sqrt(1-p) I.
KrausSet replacement_kraus(const ComplexMatrix& target, double p) {
  const auto d = target.rows();
  KrausSet out;
  out.push_back(std::sqrt(1.0 - p) * ComplexMatrix::Identity(d, d));
  Spectrum s = eig_hermitian(target);
  for (Eigen::Index j = 0; j < d; ++j) {
    double lam = std::max(s.values[j], 0.0);
    if (lam == 0.0) continue;
    for (Eigen::Index k = 0; k < d; ++k) {
      ComplexVector e = ComplexVector::Zero(d);
      e(k) = 1.0;
      out.push_back(std::sqrt(p * lam) * s.vectors.col(j) * e.adjoint());
    }
  }
  return out;
}

ComplexMatrix channel_fixed_point(const KrausSet& kraus, int d) {
  LinearMap map = kraus_map(kraus);
  ComplexMatrix m = superoperator_matrix(map, d);
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < solver.eigenvalues().size(); ++i)
    if (std::abs(solver.eigenvalues()(i) - 1.0) < std::abs(solver.eigenvalues()(best) - 1.0))
      best = i;
  if (std::abs(solver.eigenvalues()(best) - 1.0) > 1e-8)
    throw ConvergenceError("channel has no fixed point within tolerance");
  auto basis = hermitian_operator_basis(d);
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < basis.size(); ++i)
    x += solver.eigenvectors()(static_cast<Eigen::Index>(i), best) * basis[i];
  x /= x.trace();
  return 0.5 * (x + x.adjoint());
}

}  // namespace

NoiseModel NoiseModel::depolarizing(double p, int d) {
  check_probability(p);
  if (d < 2) throw ValidationError("local dimension must be at least 2");
  NoiseModel m;
  m.kind_ = Kind::depolarizing;
  m.p_ = p;
  m.q_ = 0.5;
  m.d_ = d;
  m.fixed_ = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  m.kraus_ = replacement_kraus(m.fixed_, p);
  m.contraction_ = ContractionRecord{2.0, 1.0 - (1.0 - p) * (1.0 - p)};
  return m;
}

NoiseModel NoiseModel::generalized_depolarizing(double q, double p) {
  check_probability(p);
  if (!(q > 0.0 && q < 1.0)) throw ValidationError("q must lie strictly between 0 and 1");
  NoiseModel m;
  m.kind_ = Kind::generalized_depolarizing;
  m.p_ = p;
  m.q_ = q;
  m.d_ = 2;
  m.fixed_ = ComplexMatrix::Zero(2, 2);
  m.fixed_(0, 0) = q;
  m.fixed_(1, 1) = 1.0 - q;
  m.kraus_ = replacement_kraus(m.fixed_, p);
  return m;
}

NoiseModel NoiseModel::custom(KrausSet kraus) {
  require_trace_preserving(kraus);
  NoiseModel m;
  m.kind_ = Kind::custom;
  m.d_ = static_cast<int>(kraus.front().rows());
  m.fixed_ = channel_fixed_point(kraus, m.d_);
  m.kraus_ = std::move(kraus);
  return m;
}

LinearMap NoiseModel::as_map() const { return kraus_map(kraus_); }

ComplexMatrix NoiseModel::apply_site(const ComplexMatrix& rho, const RegisterShape& shape,
                                     int site) const {
  if (shape.d != d_) throw ValidationError("noise and register local dimensions differ");
  if (kind_ == Kind::custom) {
    int s[] = {site};
    return apply_kraus(rho, kraus_, s, shape);
  }
  return (1.0 - p_) * rho + p_ * replace_site(rho, shape, site, fixed_);
}

ComplexMatrix NoiseModel::apply_all(const ComplexMatrix& rho, const RegisterShape& shape) const {
  ComplexMatrix out = rho;
  for (int v = 0; v < shape.n; ++v) out = apply_site(out, shape, v);
  return out;
}

ComplexMatrix replace_site(const ComplexMatrix& x, const RegisterShape& shape, int site,
                           const ComplexMatrix& local) {
  if (site < 0 || site >= shape.n) throw ValidationError("site out of range");
  if (local.rows() != shape.d || local.cols() != shape.d)
    throw ValidationError("local operator has wrong dimension");
  const long long dim = shape.dim();
  if (x.rows() != dim || x.cols() != dim) throw ValidationError("operand has wrong dimension");
  const long long stride = ipow(shape.d, shape.n - 1 - site);
  const int d = shape.d;
  ComplexMatrix out(dim, dim);
  for (long long i = 0; i < dim; ++i) {
    const long long ai = (i / stride) % d, bi = i - ai * stride;
    for (long long j = 0; j < dim; ++j) {
      const long long aj = (j / stride) % d, bj = j - aj * stride;
      Complex acc = 0.0;
      for (int k = 0; k < d; ++k) acc += x(bi + k * stride, bj + k * stride);
      out(i, j) = local(ai, aj) * acc;
    }
  }
  return out;
}

KrausSet generalized_amplitude_damping(double q, double gamma) {
  if (!(q > 0.0 && q < 1.0)) throw ValidationError("q must lie strictly between 0 and 1");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ValidationError("gamma must lie in [0, 1]");
  const double a = std::sqrt(q), b = std::sqrt(1.0 - q), g = std::sqrt(gamma),
               c = std::sqrt(1.0 - gamma);
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2), k1 = k0, k2 = k0, k3 = k0;
  k0(0, 0) = a;
  k0(1, 1) = a * c;
  k1(0, 1) = a * g;
  k2(0, 0) = b * c;
  k2(1, 1) = b;
  k3(1, 0) = b * g;
  return {k0, k1, k2, k3};
}

}  // namespace qlimits
