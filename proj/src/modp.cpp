#include "arbordim/modp.hpp"

#include <numeric>
#include <stdexcept>

namespace arbordim {

namespace {

// dense polynomials over Z/p, p < 2^31; coefficient vectors trim trailing zeros
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP &f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

int deg(const PolyP &f) { return static_cast<int>(f.size()) - 1; }

PolyP reduce_mod_p(const IntPoly &f, long p) {
  PolyP out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_class r = f.coeff(static_cast<int>(i)) % p;
    if (r < 0)
      r += p;
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // extended euclid
  long long t = 0, newt = 1, r = static_cast<long long>(p), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (t < 0)
    t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

PolyP mul(const PolyP &a, const PolyP &b, std::uint64_t p) {
  if (a.empty() || b.empty())
    return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i])
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

PolyP mod(PolyP a, const PolyP &m, std::uint64_t p) {
  std::uint64_t linv = inv_mod(m.back(), p);
  while (deg(a) >= deg(m)) {
    std::uint64_t c = (a.back() * linv) % p;
    int shift = deg(a) - deg(m);
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t sub = (c * m[i]) % p;
      std::uint64_t &slot = a[i + static_cast<std::size_t>(shift)];
      slot = (slot + p - sub) % p;
    }
    trim(a);
    if (a.empty())
      break;
  }
  return a;
}

PolyP gcd(PolyP a, PolyP b, std::uint64_t p) {
  while (!b.empty()) {
    PolyP r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) { // monic normal form
    std::uint64_t linv = inv_mod(a.back(), p);
    for (auto &c : a)
      c = (c * linv) % p;
  }
  return a;
}

PolyP derivative(const PolyP &f, std::uint64_t p) {
  if (f.size() <= 1)
    return {};
  PolyP out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i)
    out[i - 1] = (f[i] * (i % p)) % p;
  trim(out);
  return out;
}

PolyP powmod_x_p(const PolyP &base, std::uint64_t e, const PolyP &m, std::uint64_t p) {
  PolyP result = {1};
  PolyP b = mod(base, m, p);
  while (e) {
    if (e & 1)
      result = mod(mul(result, b, p), m, p);
    e >>= 1;
    if (e)
      b = mod(mul(b, b, p), m, p);
  }
  return result;
}

PolyP divexact(PolyP a, const PolyP &b, std::uint64_t p) {
  PolyP q(static_cast<std::size_t>(deg(a) - deg(b)) + 1, 0);
  std::uint64_t linv = inv_mod(b.back(), p);
  while (deg(a) >= deg(b)) {
    std::uint64_t c = (a.back() * linv) % p;
    int shift = deg(a) - deg(b);
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = (c * b[i]) % p;
      std::uint64_t &slot = a[i + static_cast<std::size_t>(shift)];
      slot = (slot + p - sub) % p;
    }
    trim(a);
    if (a.empty())
      break;
  }
  trim(q);
  return q;
}

} // namespace

std::set<int> distinct_factor_degrees_mod_p(const IntPoly &f, long p) {
  const std::uint64_t up = static_cast<std::uint64_t>(p);
  PolyP fb = reduce_mod_p(f, p);
  if (deg(fb) < 1)
    return {};
  // make monic
  std::uint64_t linv = inv_mod(fb.back(), up);
  for (auto &c : fb)
    c = (c * linv) % up;

  std::set<int> degrees;
  PolyP h = {0, 1}; // x
  PolyP work = fb;
  for (int k = 1; 2 * k <= deg(work); ++k) {
    h = powmod_x_p(h, up, work, up); // h = x^(p^k) mod work
    PolyP hx = h;
    // h - x
    if (hx.size() < 2)
      hx.resize(2, 0);
    hx[1] = (hx[1] + up - 1) % up;
    trim(hx);
    PolyP g = gcd(work, hx, up);
    if (deg(g) > 0) {
      degrees.insert(k);
      work = divexact(work, g, up);
      if (deg(work) < 1)
        break;
      h = mod(h, work, up);
    }
  }
  if (deg(work) > 0)
    degrees.insert(deg(work));
  return degrees;
}

bool is_good_prime(const IntPoly &f, long p) {
  if (mpz_divisible_ui_p(f.lead().get_mpz_t(), static_cast<unsigned long>(p)))
    return false;
  PolyP fb = reduce_mod_p(f, p);
  if (deg(fb) != f.degree())
    return false;
  PolyP d = derivative(fb, static_cast<std::uint64_t>(p));
  if (d.empty())
    return false;
  PolyP g = gcd(fb, d, static_cast<std::uint64_t>(p));
  return deg(g) == 0;
}

std::vector<long> first_good_primes(const IntPoly &f, int count, long start) {
  std::vector<long> out;
  mpz_class p(start - 1);
  while (static_cast<int>(out.size()) < count) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (!p.fits_slong_p())
      throw std::runtime_error("first_good_primes: prime search ran away");
    long pl = p.get_si();
    if (is_good_prime(f, pl))
      out.push_back(pl);
    if (pl > 1000000)
      throw std::runtime_error("first_good_primes: no good primes below 10^6");
  }
  return out;
}

FrobeniusReport frobenius_lower_bound(const RationalMap &f, const ProjPoint &alpha, int n,
                                      const std::vector<long> &primes, const Caps &caps) {
  FrobeniusReport rep;
  PreimagePoly pn = preimage_polynomial(f, n, alpha, caps);
  if (pn.poly.degree() < 1) {
    rep.degenerate = true;
    return rep;
  }
  if (!is_squarefree(pn.poly)) {
    rep.degenerate = true;
    return rep;
  }
  for (long p : primes) {
    if (!is_good_prime(pn.poly, p))
      continue;
    auto degrees = distinct_factor_degrees_mod_p(pn.poly, p);
    mpz_class l = 1;
    for (int d : degrees)
      mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(d));
    rep.per_prime.emplace_back(p, l.get_si());
    mpz_lcm(rep.lower_bound.get_mpz_t(), rep.lower_bound.get_mpz_t(), l.get_mpz_t());
    ++rep.primes_used;
  }
  if (rep.primes_used == 0)
    throw std::invalid_argument("frobenius_lower_bound: no good primes in the list");
  return rep;
}

} // namespace arbordim
