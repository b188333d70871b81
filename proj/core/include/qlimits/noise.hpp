#pragma once

#include <optional>

#include "qlimits/numerics.hpp"

namespace qlimits {

// Known SDPI data for a noise model: D_alpha contracts by (1 - rate) per
// application towards the fixed point.
struct ContractionRecord {
  double alpha = 2.0;
  double rate = 0.0;
};

// Single-qudit noise channel applied identically to every qudit.
class NoiseModel {
 public:
  enum class Kind { depolarizing, generalized_depolarizing, custom };

  // rho -> (1-p) rho + p I/d.
  static NoiseModel depolarizing(double p, int d = 2);
  // rho -> (1-p) rho + p tau_q.
  static NoiseModel generalized_depolarizing(double q, double p);
  // Any trace-preserving Kraus set; the fixed point is computed.
  static NoiseModel custom(KrausSet kraus);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  double q() const { return q_; }
  int d() const { return d_; }
  const KrausSet& kraus() const { return kraus_; }
  const ComplexMatrix& fixed_point() const { return fixed_; }
  const std::optional<ContractionRecord>& contraction() const { return contraction_; }

  LinearMap as_map() const;
  // Applies the channel to one qudit of a register operator.
  ComplexMatrix apply_site(const ComplexMatrix& rho, const RegisterShape& shape, int site) const;
  // Applies the channel to every qudit.
  ComplexMatrix apply_all(const ComplexMatrix& rho, const RegisterShape& shape) const;

 private:
  Kind kind_ = Kind::custom;
  double p_ = 0.0;
  double q_ = 0.5;
  int d_ = 2;
  KrausSet kraus_;
  ComplexMatrix fixed_;
  std::optional<ContractionRecord> contraction_;
};

// local (x) tr_site(x), with `local` placed at `site`.
ComplexMatrix replace_site(const ComplexMatrix& x, const RegisterShape& shape, int site,
                           const ComplexMatrix& local);

// Kraus set of the generalized amplitude damping channel with damping gamma
// whose fixed point is tau_q.
KrausSet generalized_amplitude_damping(double q, double gamma);

}  // namespace qlimits
