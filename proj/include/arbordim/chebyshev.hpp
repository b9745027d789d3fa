#ifndef ARBORDIM_CHEBYSHEV_HPP
#define ARBORDIM_CHEBYSHEV_HPP

#include <string>
#include <vector>

#include "arbordim/poly.hpp"

namespace arbordim {

// Monic normalization with T_d(x + 1/x) = x^d + x^(-d): T_0 = 2, T_1 = x,
// T_{k+1} = x T_k - T_{k-1}.
IntPoly chebyshev(int d);

// Exact polynomial-identity verification of x^d * T_d(x + 1/x) == x^(2d) + 1.
bool chebyshev_laurent_identity(int d);

struct ChebyshevReport {
  int dmax = 0;
  long identities_checked = 0;
  bool all_hold = true;
  std::vector<std::string> failures;
};

// Verifies, exactly, for all applicable d, e with d*e <= dmax: the nesting
// identity T_{de} = T_d(T_e), the parity of T_d, the Laurent characterization,
// and (-T_d)^2 = T_{d^2} for odd d.
ChebyshevReport chebyshev_identities(int dmax);

} // namespace arbordim

#endif
