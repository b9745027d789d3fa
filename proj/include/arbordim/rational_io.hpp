#ifndef ARBORDIM_RATIONAL_IO_HPP
#define ARBORDIM_RATIONAL_IO_HPP

#include <gmpxx.h>
#include <string>

namespace arbordim {

// "p/q" (canonical form, q omitted when 1).
std::string rat_to_string(const mpq_class &x);

// Decimal rendering of an exact rational with `digits` significant digits,
// round-half-away-from-zero on the last digit.  Deterministic.
std::string rat_to_decimal(const mpq_class &x, int digits);

// Parses "p", "p/q", or a decimal literal like "-3.25".
mpq_class rat_from_string(const std::string &s);

mpz_class factorial(unsigned n);
mpz_class pow_mpz(const mpz_class &base, unsigned long e);

// base^e vs x without materializing base^e when bit-length bounds decide.
// Returns -1, 0, +1 for x < base^e, x == base^e, x > base^e.
int cmp_with_power(const mpz_class &x, const mpz_class &base, const mpz_class &e);

// Largest k and b with b^k == n (n >= 2); returns {n, 1} when n is not a
// perfect power.  b is not itself a perfect power.
struct PowerForm {
  mpz_class base;
  unsigned long exponent;
};
PowerForm minimal_power_base(const mpz_class &n);

} // namespace arbordim

#endif
