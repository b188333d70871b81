#pragma once

#include <vector>

#include "qlimits/quantum.hpp"
#include "qlimits/schedule.hpp"

namespace qlimits {

// alpha_e(t) H_e acting on `support`.
struct HamiltonianTerm {
  std::vector<int> support;
  ComplexMatrix h;
  PiecewiseLinear coupling;
};

// b = max_e sup_t |alpha_e(t)|.
double coupling_bound(const std::vector<HamiltonianTerm>& terms);

// Nearest-neighbour chain with H_e = (XX + YY)/4 (norm 1/2) and constant
// coupling.
std::vector<HamiltonianTerm> xx_chain(int n, double coupling = 1.0);

// Unitary of the time-ordered evolution generated by the terms whose support
// lies inside `region` (all terms if `region` is empty). Constant couplings
// use a single exact exponential, otherwise midpoint steps.
ComplexMatrix evolution_unitary(const std::vector<HamiltonianTerm>& terms,
                                const std::vector<int>& region, const RegisterShape& shape,
                                double t, int steps_per_unit_time = 400);

// || tr_{A^c}( U_V(t) rho U_V(t)^dag - U_B(t) rho U_B(t)^dag ) ||_1.
// Requires A a subset of B and every ||H_e|| <= 1/2.
double lr_discrepancy(const std::vector<HamiltonianTerm>& terms, const std::vector<int>& a,
                      const std::vector<int>& b, double t, const DensityMatrix& rho,
                      int steps_per_unit_time = 400);

}  // namespace qlimits
