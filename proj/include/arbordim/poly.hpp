#ifndef ARBORDIM_POLY_HPP
#define ARBORDIM_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arbordim {

// Dense univariate polynomial with exact integer coefficients.
// coeff(i) is the coefficient of x^i; the zero polynomial has degree -1.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(const mpz_class &c);
  static IntPoly x();
  static IntPoly from_longs(std::vector<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class &coeff(int i) const;
  const mpz_class &lead() const;
  const std::vector<mpz_class> &coeffs() const { return c_; }

  mpz_class content() const; // nonnegative gcd of coefficients (0 for zero)
  // primitive part with positive leading coefficient
  IntPoly normalized() const;
  IntPoly derivative() const;
  mpq_class eval(const mpq_class &x) const;
  // value of the degree-`total` homogenization at (a : b)
  mpz_class eval_homogeneous(const mpz_class &a, const mpz_class &b, int total) const;

  // largest coefficient size in bits
  long max_coeff_bits() const;

  std::string str() const; // e.g. "x^4 - 2*x^2 + 1"

  friend IntPoly operator+(const IntPoly &a, const IntPoly &b);
  friend IntPoly operator-(const IntPoly &a, const IntPoly &b);
  friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
  friend IntPoly operator*(const mpz_class &k, const IntPoly &a);
  friend IntPoly operator-(const IntPoly &a);
  friend bool operator==(const IntPoly &a, const IntPoly &b) { return a.c_ == b.c_; }

private:
  std::vector<mpz_class> c_;
  void trim();
};

IntPoly pow_poly(const IntPoly &a, unsigned e);
// p(q(x))
IntPoly compose_poly(const IntPoly &p, const IntPoly &q);
// numerator of p(n/d): sum p_i n^i d^(deg p - i)
IntPoly compose_rational_numerator(const IntPoly &p, const IntPoly &n, const IntPoly &d);

// primitive gcd with positive leading coefficient (primitive PRS)
IntPoly gcd_poly(const IntPoly &a, const IntPoly &b);
// exact division: a = b * result (throws std::invalid_argument otherwise)
IntPoly divexact_poly(const IntPoly &a, const IntPoly &b);
// p / gcd(p, p'): same roots, all simple
IntPoly squarefree_part(const IntPoly &p);
bool is_squarefree(const IntPoly &p);

// all rational roots, via the rational root theorem (exact)
std::vector<mpq_class> rational_roots(const IntPoly &p);

} // namespace arbordim

#endif
