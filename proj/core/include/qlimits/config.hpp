#pragma once

#include <stdexcept>
#include <string>

namespace qlimits {

// Numerical tolerances shared by every module. Defaults are the documented
// contract values; callers may pass a modified copy where an API accepts one.
struct Tolerances {
  double hermiticity = 1e-12;
  double reconstruction = 1e-10;
  double pseudo_inverse_cutoff = 1e-12;
  double trace = 1e-10;
  double positivity = 1e-10;
  double kraus_completeness = 1e-10;
  double diagonal = 1e-14;
  double support_mass = 1e-10;
  double trajectory = 1e-8;
};

const Tolerances& default_tolerances();

// Largest register (in qubit-equivalents, log2 of the Hilbert dimension)
// accepted by state constructors. Reads QLIMITS_MAX_QUBITS once; default 12.
int max_qubits();
void set_max_qubits(int qubits);

inline constexpr const char* kVersion = "0.3.0";

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qlimits
