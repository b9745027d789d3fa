#ifndef ARBORDIM_MODP_HPP
#define ARBORDIM_MODP_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "arbordim/poly.hpp"
#include "arbordim/ratmap.hpp"

namespace arbordim {

// Distinct degrees of the irreducible factors of f modulo p (f squarefree
// mod p).  The lcm of these degrees is the order of the Frobenius action on
// the roots.
std::set<int> distinct_factor_degrees_mod_p(const IntPoly &f, long p);

// p is usable when it divides neither the leading coefficient nor the
// discriminant (checked as: degree preserved and squarefree mod p).
bool is_good_prime(const IntPoly &f, long p);
std::vector<long> first_good_primes(const IntPoly &f, int count, long start = 2);

struct FrobeniusReport {
  mpz_class lower_bound = 1;  // lcm over sampled primes; divides [K_n : Q]
  bool degenerate = false;    // preimage polynomial was not squarefree
  int primes_used = 0;
  std::vector<std::pair<long, long>> per_prime; // (p, lcm of factor degrees mod p)
};

// Certified divisor of [Q(f^-n(alpha)) : Q] from Frobenius cycle types.
FrobeniusReport frobenius_lower_bound(const RationalMap &f, const ProjPoint &alpha, int n,
                                      const std::vector<long> &primes, const Caps &caps = {});

} // namespace arbordim

#endif
