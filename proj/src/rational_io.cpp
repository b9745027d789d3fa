#include "arbordim/rational_io.hpp"

#include "arbordim/errors.hpp"

#include <stdexcept>

namespace arbordim {

std::string rat_to_string(const mpq_class &x) {
  if (x.get_den() == 1)
    return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string rat_to_decimal(const mpq_class &x, int digits) {
  if (digits < 1)
    digits = 1;
  if (x == 0)
    return "0";
  mpq_class a = x;
  bool neg = a < 0;
  if (neg)
    a = -a;

  // Find e with 10^e <= a < 10^(e+1), then take digits of a / 10^(e-digits+1).
  mpz_class num = a.get_num(), den = a.get_den();
  long e = 0;
  mpq_class t = a;
  while (t >= 10) {
    t /= 10;
    ++e;
  }
  while (t < 1) {
    t *= 10;
    --e;
  }
  long shift = digits - 1 - e;
  mpz_class scaled_num = num, scaled_den = den;
  if (shift >= 0)
    scaled_num *= pow_mpz(10, static_cast<unsigned long>(shift));
  else
    scaled_den *= pow_mpz(10, static_cast<unsigned long>(-shift));
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  if (2 * r >= scaled_den)
    ++q; // may carry to digits+1 digits; harmless for rendering

  std::string ds = q.get_str();
  long point = e + 1; // digits before the decimal point
  if (static_cast<long>(ds.size()) > digits)
    ++point; // rounding carried into a new leading digit

  std::string out;
  if (point <= 0) {
    out = "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += ds;
  } else if (point >= static_cast<long>(ds.size())) {
    out = ds;
    out.append(static_cast<std::size_t>(point - ds.size()), '0');
  } else {
    out = ds.substr(0, static_cast<std::size_t>(point)) + "." + ds.substr(static_cast<std::size_t>(point));
  }
  // trim trailing zeros after a decimal point
  if (out.find('.') != std::string::npos) {
    while (!out.empty() && out.back() == '0')
      out.pop_back();
    if (!out.empty() && out.back() == '.')
      out.pop_back();
  }
  return neg ? "-" + out : out;
}

mpq_class rat_from_string(const std::string &s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
  }
  std::string ipart = s.substr(0, dot), fpart = s.substr(dot + 1);
  bool neg = !ipart.empty() && ipart[0] == '-';
  if (neg)
    ipart = ipart.substr(1);
  if (ipart.empty())
    ipart = "0";
  mpz_class num(ipart + fpart);
  mpz_class den = pow_mpz(10, fpart.size());
  mpq_class q(num, den);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class pow_mpz(const mpz_class &base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

int cmp_with_power(const mpz_class &x, const mpz_class &base, const mpz_class &e) {
  if (base < 2)
    throw std::invalid_argument("cmp_with_power: base must be >= 2");
  if (e < 0)
    throw std::invalid_argument("cmp_with_power: negative exponent");
  if (x <= 0)
    return -1;
  if (e == 0)
    return cmp(x, mpz_class(1));
  // bitlen bounds: 2^(bl-1) <= v < 2^bl
  const mpz_class blx = static_cast<unsigned long>(mpz_sizeinbase(x.get_mpz_t(), 2));
  const mpz_class blb = static_cast<unsigned long>(mpz_sizeinbase(base.get_mpz_t(), 2));
  // base^e >= 2^(e*(blb-1)), so x < base^e if blx <= e*(blb-1)
  if (blx <= e * (blb - 1))
    return -1;
  // base^e < 2^(e*blb), so x > base^e if blx - 1 >= e*blb
  if (blx - 1 >= e * blb)
    return 1;
  // inconclusive: materialize (exponent is small here by the bounds above)
  if (!e.fits_ulong_p())
    throw resource_limit_error("cmp_with_power: exponent too large to decide");
  mpz_class p = pow_mpz(base, e.get_ui());
  return cmp(x, p);
}

PowerForm minimal_power_base(const mpz_class &n) {
  if (n < 2)
    throw std::invalid_argument("minimal_power_base: need n >= 2");
  mpz_class b = n;
  unsigned long e = 1;
  bool reduced = true;
  while (reduced && mpz_perfect_power_p(b.get_mpz_t())) {
    reduced = false;
    unsigned long maxk = mpz_sizeinbase(b.get_mpz_t(), 2); // b >= 2^(maxk-1)
    for (unsigned long k = 2; k <= maxk; ++k) {
      mpz_class r;
      if (mpz_root(r.get_mpz_t(), b.get_mpz_t(), k) != 0) {
        b = r;
        e *= k;
        reduced = true;
        break;
      }
    }
  }
  return {b, e};
}

} // namespace arbordim
