#include "arbordim/logvalue.hpp"

#include "arbordim/rational_io.hpp"

#include <stdexcept>

namespace arbordim {

LogValue LogValue::scaled(const mpq_class &c) const {
  return {exact, value * c, radius * abs(c)};
}

LogValue LogValue::plus(const LogValue &o) const {
  return {exact && o.exact, value + o.value, radius + o.radius};
}

bool LogValue::certainly_le(const mpq_class &bound) const {
  if (exact)
    return value <= bound;
  if (value + radius <= bound)
    return true;
  if (value - radius > bound)
    return false;
  throw std::runtime_error("LogValue: <= undecidable at current precision");
}

bool LogValue::certainly_lt(const mpq_class &bound) const {
  if (exact)
    return value < bound;
  if (value + radius < bound)
    return true;
  if (value - radius >= bound)
    return false;
  throw std::runtime_error("LogValue: < undecidable at current precision");
}

bool LogValue::certainly_ge(const mpq_class &bound) const {
  if (exact)
    return value >= bound;
  if (value - radius >= bound)
    return true;
  if (value + radius < bound)
    return false;
  throw std::runtime_error("LogValue: >= undecidable at current precision");
}

std::string LogValue::str(int digits) const { return rat_to_decimal(value, digits); }

LogValue log2_enclosure(const mpz_class &n, int frac_bits) {
  if (n < 1)
    throw std::invalid_argument("log2_enclosure: need n >= 1");
  unsigned long b = mpz_sizeinbase(n.get_mpz_t(), 2) - 1; // 2^b <= n < 2^(b+1)
  if (mpz_popcount(n.get_mpz_t()) == 1)
    return LogValue::make_exact(mpq_class(static_cast<unsigned long>(b)));

  for (long guard = 64;; guard *= 2) {
    const long F = frac_bits + guard;
    // mantissa enclosure [lo, hi] / 2^F for n / 2^b in [1, 2)
    mpz_class lo = n;
    if (F >= static_cast<long>(b))
      lo <<= (F - static_cast<long>(b));
    else
      lo >>= (static_cast<long>(b) - F);
    mpz_class hi = lo + 1;
    mpz_class frac = 0;
    bool ambiguous = false;
    const mpz_class two_F1 = mpz_class(1) << (F + 1);
    for (int i = 0; i < frac_bits; ++i) {
      lo = (lo * lo) >> F;
      hi = ((hi * hi) >> F) + 1;
      frac <<= 1;
      if (lo >= two_F1) {
        frac += 1;
        lo >>= 1;
        hi = (hi + 1) >> 1;
      } else if (hi < two_F1) {
        // bit stays 0
      } else {
        ambiguous = true;
        break;
      }
    }
    if (ambiguous)
      continue;
    // true fractional part lies in [frac, frac+1) / 2^frac_bits
    mpq_class mid(2 * frac + 1, mpz_class(1) << (frac_bits + 1));
    mid.canonicalize();
    mpq_class rad(1, mpz_class(1) << (frac_bits + 1));
    rad.canonicalize();
    return LogValue::make_interval(mpq_class(static_cast<unsigned long>(b)) + mid, rad);
  }
}

LogValue log_ratio(const mpz_class &num, const mpz_class &den, int prec_digits) {
  if (num < 1 || den < 2)
    throw std::invalid_argument("log_ratio: need num >= 1 and den >= 2");
  if (num == 1)
    return LogValue::make_exact(0);
  PowerForm pn = minimal_power_base(num);
  PowerForm pd = minimal_power_base(den);
  if (pn.base == pd.base) {
    mpq_class r(static_cast<unsigned long>(pn.exponent), static_cast<unsigned long>(pd.exponent));
    r.canonicalize();
    return LogValue::make_exact(r);
  }
  long prec_bits = static_cast<long>(prec_digits * 3.3219280948873626) + 8;
  long size_bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  long extra = 0;
  while ((1l << extra) < size_bits + 2)
    ++extra;
  mpq_class target(1, pow_mpz(10, static_cast<unsigned long>(prec_digits)));
  target.canonicalize();
  for (long fb = prec_bits + extra + 16;; fb *= 2) {
    LogValue ln = log2_enclosure(num, static_cast<int>(fb));
    LogValue ld = log2_enclosure(den, static_cast<int>(fb));
    if (ln.exact && ld.exact) {
      mpq_class r = ln.value / ld.value;
      r.canonicalize();
      return LogValue::make_exact(r);
    }
    mpq_class nlo = ln.value - ln.radius, nhi = ln.value + ln.radius;
    mpq_class dlo = ld.value - ld.radius, dhi = ld.value + ld.radius;
    if (dlo <= 0)
      continue;
    mpq_class rlo = nlo / dhi, rhi = nhi / dlo;
    mpq_class mid = (rlo + rhi) / 2, rad = (rhi - rlo) / 2;
    if (rad < target)
      return LogValue::make_interval(mid, rad);
  }
}

} // namespace arbordim
