#include "qlimits/config.hpp"

#include <atomic>
#include <cstdlib>

namespace qlimits {

const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

namespace {

int read_env_cap() {
  const char* raw = std::getenv("QLIMITS_MAX_QUBITS");
  if (raw == nullptr) return 12;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || v < 1 || v > 20) return 12;
  return static_cast<int>(v);
}

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{read_env_cap()};
  return cap;
}

}  // namespace

int max_qubits() { return cap_storage().load(); }

void set_max_qubits(int qubits) {
  if (qubits < 1 || qubits > 20) throw ValidationError("max_qubits must lie in [1, 20]");
  cap_storage().store(qubits);
}

}  // namespace qlimits
