#ifndef ARBORDIM_LOGVALUE_HPP
#define ARBORDIM_LOGVALUE_HPP

#include <gmpxx.h>
#include <string>

namespace arbordim {

// A real number carried either exactly (as a rational) or as a certified
// rational enclosure [value - radius, value + radius].  All arithmetic here
// is integer arithmetic on GMP values; no machine floating point.
struct LogValue {
  bool exact = true;
  mpq_class value = 0;
  mpq_class radius = 0;

  static LogValue make_exact(const mpq_class &v) { return {true, v, 0}; }
  static LogValue make_interval(const mpq_class &v, const mpq_class &r) { return {false, v, r}; }

  LogValue scaled(const mpq_class &c) const;
  LogValue plus(const LogValue &o) const;

  // Certified comparisons; throw std::runtime_error when the enclosures
  // overlap without forcing the answer.
  bool certainly_le(const mpq_class &bound) const;
  bool certainly_lt(const mpq_class &bound) const;
  bool certainly_ge(const mpq_class &bound) const;

  std::string str(int digits = 50) const;
};

// log2(n) for n >= 1 as a certified enclosure with radius < 2^-frac_bits.
// Integer part from the bit length, fractional bits by repeated squaring of
// the fixed-point mantissa.
LogValue log2_enclosure(const mpz_class &n, int frac_bits);

// log(num)/log(den) for num >= 1, den >= 2.  Exact (rational) whenever both
// arguments are powers of a common base; otherwise a certified enclosure
// with radius < 10^-prec_digits.
LogValue log_ratio(const mpz_class &num, const mpz_class &den, int prec_digits = 50);

} // namespace arbordim

#endif
