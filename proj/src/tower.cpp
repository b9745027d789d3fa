#include "arbordim/tower.hpp"

#include "arbordim/errors.hpp"
#include "arbordim/rational_io.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace arbordim {

namespace {

mpz_class square_free_kernel(const mpz_class &n, mpz_class &square_root_out) {
  // n > 0: n = square_root_out^2 * kernel, square factors found by trial
  // division up to 10^6 plus one perfect-square check on the cofactor
  mpz_class rest = n, s = 1;
  for (unsigned long p = 2; p <= 1000000; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0)
      break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p))
      continue;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2)
      s *= p;
  }
  mpz_class kernel = n / (s * s);
  if (kernel > 1 && mpz_perfect_square_p(kernel.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), kernel.get_mpz_t());
    s *= r;
    kernel = 1;
  }
  square_root_out = s;
  return kernel;
}

} // namespace

std::pair<mpq_class, mpq_class> strip_square_factor(const mpq_class &v) {
  if (v == 0)
    return {mpq_class(0), mpq_class(1)};
  mpz_class num = v.get_num(), den = v.get_den();
  bool neg = num < 0;
  if (neg)
    num = -num;
  mpz_class sn, sd;
  mpz_class kn = square_free_kernel(num, sn);
  mpz_class kd = square_free_kernel(den, sd);
  mpq_class reduced(neg ? mpq_class(-kn, kd) : mpq_class(kn, kd));
  reduced.canonicalize();
  mpq_class s(sn, sd);
  s.canonicalize();
  return {reduced, s};
}

mpz_class QuadTower::degree() const { return pow_mpz(2, static_cast<unsigned long>(levels())); }

QuadTower::Elem QuadTower::from_rational(const mpq_class &v) const {
  Elem e(dim(), 0);
  e[0] = v;
  return e;
}

QuadTower::Elem QuadTower::lift(const Elem &old) const {
  if (old.size() > dim())
    throw std::invalid_argument("lift: element larger than the tower");
  Elem e(old);
  e.resize(dim(), 0);
  return e;
}

bool QuadTower::is_zero(const Elem &a) const {
  for (const auto &c : a)
    if (c != 0)
      return false;
  return true;
}

QuadTower::Elem QuadTower::add(const Elem &a, const Elem &b) const {
  Elem out(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += b[i];
  return out;
}

QuadTower::Elem QuadTower::sub(const Elem &a, const Elem &b) const {
  Elem out(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] -= b[i];
  return out;
}

QuadTower::Elem QuadTower::neg(const Elem &a) const {
  Elem out(a);
  for (auto &c : out)
    c = -c;
  return out;
}

QuadTower::Elem QuadTower::scale(const Elem &a, const mpq_class &c) const {
  Elem out(a);
  for (auto &v : out)
    v *= c;
  return out;
}

QuadTower::Elem QuadTower::mul(const Elem &a, const Elem &b) const {
  if (a.size() != dim() || b.size() != dim())
    throw std::invalid_argument("mul: element dimension mismatch");
  return mul_level(levels(), a, b);
}

QuadTower::Elem QuadTower::mul_level(int level, const Elem &a, const Elem &b) const {
  if (level == 0)
    return {a[0] * b[0]};
  const std::size_t h = std::size_t(1) << (level - 1);
  Elem a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
  Elem b0(b.begin(), b.begin() + h), b1(b.begin() + h, b.end());
  // (a0 + a1 r)(b0 + b1 r) = a0 b0 + a1 b1 delta + (a0 b1 + a1 b0) r
  Elem p00 = mul_level(level - 1, a0, b0);
  Elem p11 = mul_level(level - 1, a1, b1);
  Elem low = mul_level(level - 1, p11, radicands_[level - 1]);
  for (std::size_t i = 0; i < h; ++i)
    low[i] += p00[i];
  Elem c01 = mul_level(level - 1, a0, b1);
  Elem c10 = mul_level(level - 1, a1, b0);
  Elem out(std::size_t(1) << level);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = low[i];
    out[h + i] = c01[i] + c10[i];
  }
  return out;
}

QuadTower::Elem QuadTower::inverse(const Elem &a) const {
  if (is_zero(a))
    throw std::invalid_argument("inverse: zero element");
  return inv_level(levels(), a);
}

QuadTower::Elem QuadTower::inv_level(int level, const Elem &a) const {
  if (level == 0)
    return {1 / a[0]};
  const std::size_t h = std::size_t(1) << (level - 1);
  Elem a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
  bool a1_zero = true;
  for (const auto &c : a1)
    if (c != 0) {
      a1_zero = false;
      break;
    }
  if (a1_zero) {
    Elem w = inv_level(level - 1, a0);
    w.resize(std::size_t(1) << level, 0);
    return w;
  }
  // 1/(a0 + a1 r) = (a0 - a1 r) / (a0^2 - a1^2 delta); the norm is nonzero
  // because delta is a certified non-square below
  Elem norm = mul_level(level - 1, a0, a0);
  Elem t = mul_level(level - 1, mul_level(level - 1, a1, a1), radicands_[level - 1]);
  for (std::size_t i = 0; i < h; ++i)
    norm[i] -= t[i];
  Elem w = inv_level(level - 1, norm);
  Elem r0 = mul_level(level - 1, a0, w);
  Elem r1 = mul_level(level - 1, a1, w);
  Elem out(std::size_t(1) << level);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = r0[i];
    out[h + i] = -r1[i];
  }
  return out;
}

long QuadTower::max_coord_bits(const Elem &a) const {
  long m = 0;
  for (const auto &c : a) {
    m = std::max(m, static_cast<long>(mpz_sizeinbase(c.get_num().get_mpz_t(), 2)));
    m = std::max(m, static_cast<long>(mpz_sizeinbase(c.get_den().get_mpz_t(), 2)));
  }
  return m;
}

std::optional<QuadTower::Elem> QuadTower::is_square(const Elem &z) const {
  if (z.size() != dim())
    throw std::invalid_argument("is_square: element dimension mismatch");
  auto r = sqrt_level(levels(), z);
  if (r) {
    assert(equal(mul_level(levels(), *r, *r), z));
  }
  return r;
}

std::optional<QuadTower::Elem> QuadTower::sqrt_level(int level, const Elem &z) const {
  if (level == 0) {
    const mpq_class &v = z[0];
    if (v == 0)
      return Elem{mpq_class(0)};
    if (v < 0)
      return std::nullopt;
    if (!mpz_perfect_square_p(v.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(v.get_den().get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), v.get_den().get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return Elem{r};
  }
  const std::size_t h = std::size_t(1) << (level - 1);
  Elem a(z.begin(), z.begin() + h), b(z.begin() + h, z.end());
  const Elem &delta = radicands_[level - 1];
  bool b_zero = true;
  for (const auto &c : b)
    if (c != 0) {
      b_zero = false;
      break;
    }
  auto cat = [&](const Elem &lo, const Elem &hi) {
    Elem out(lo);
    out.insert(out.end(), hi.begin(), hi.end());
    return out;
  };
  Elem zero_h(h, 0);
  if (b_zero) {
    // z = a: either a = w0^2 below, or a*delta = t^2 below and sqrt is (t/delta) r
    if (auto w0 = sqrt_level(level - 1, a))
      return cat(*w0, zero_h);
    Elem ad = mul_level(level - 1, a, delta);
    if (auto t = sqrt_level(level - 1, ad)) {
      Elem w1 = mul_level(level - 1, *t, inv_level(level - 1, delta));
      return cat(zero_h, w1);
    }
    return std::nullopt;
  }
  // z = a + b r with b != 0: need a^2 - b^2 delta = n^2 below and
  // (a +- n)/2 = w0^2 below; then w1 = b/(2 w0)
  Elem a2 = mul_level(level - 1, a, a);
  Elem b2d = mul_level(level - 1, mul_level(level - 1, b, b), delta);
  Elem normv(h);
  for (std::size_t i = 0; i < h; ++i)
    normv[i] = a2[i] - b2d[i];
  auto n = sqrt_level(level - 1, normv);
  if (!n)
    return std::nullopt;
  for (int sgn = 0; sgn < 2; ++sgn) {
    Elem half(h);
    for (std::size_t i = 0; i < h; ++i)
      half[i] = (a[i] + (sgn == 0 ? (*n)[i] : -(*n)[i])) / 2;
    auto w0 = sqrt_level(level - 1, half);
    if (!w0)
      continue;
    bool w0_zero = true;
    for (const auto &c : *w0)
      if (c != 0) {
        w0_zero = false;
        break;
      }
    if (w0_zero)
      continue; // b != 0 forces w0 != 0
    Elem w1 = mul_level(level - 1, b, inv_level(level - 1, *w0));
    for (auto &c : w1)
      c /= 2;
    Elem cand = cat(*w0, w1);
    if (equal(mul_level(level, cand, cand), z))
      return cand;
  }
  return std::nullopt;
}

QuadTower::AdjoinResult QuadTower::adjoin_sqrt(const Elem &delta, const TowerCaps &caps) {
  if (delta.size() != dim())
    throw std::invalid_argument("adjoin_sqrt: element dimension mismatch");
  if (is_zero(delta))
    throw std::invalid_argument("adjoin_sqrt: zero radicand");
  if (auto r = is_square(delta))
    return {false, *r};
  if (levels() + 1 > caps.max_levels)
    throw resource_limit_error("adjoin_sqrt: tower degree cap 2^" +
                               std::to_string(caps.max_levels) + " reached");
  // strip the rational square content to keep coordinate heights down
  mpq_class content = 0;
  for (const auto &c : delta)
    if (c != 0) {
      if (content == 0)
        content = abs(c);
      else {
        // gcd of rationals: gcd of numerators over lcm of denominators
        mpz_class gn, ld;
        mpz_gcd(gn.get_mpz_t(), content.get_num().get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(ld.get_mpz_t(), content.get_den().get_mpz_t(), c.get_den().get_mpz_t());
        content = mpq_class(gn, ld);
        content.canonicalize();
      }
    }
  auto [reduced_content, s] = strip_square_factor(content);
  (void)reduced_content;
  Elem stored(delta);
  if (s != 1) {
    mpq_class inv_s2 = 1 / (s * s);
    for (auto &c : stored)
      c *= inv_s2;
  }
  radicands_.push_back(stored);
  Elem root(dim(), 0);
  root[dim() / 2] = s; // s * sqrt(stored) = sqrt(delta)
  return {true, root};
}

QuadTower::RankResult QuadTower::square_class_rank(const std::vector<Elem> &elems) const {
  RankResult out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (is_zero(elems[i]))
      throw std::invalid_argument("square_class_rank: zero element at position " + std::to_string(i));
    bool dependent = false;
    const std::size_t nb = out.basis.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << nb) && !dependent; ++mask) {
      Elem prod = elems[i];
      std::vector<int> subset;
      for (std::size_t j = 0; j < nb; ++j)
        if (mask >> j & 1) {
          prod = mul(prod, elems[static_cast<std::size_t>(out.basis[j])]);
          subset.push_back(out.basis[j]);
        }
      if (auto w = is_square(prod)) {
        out.relations.push_back({static_cast<int>(i), subset, *w});
        dependent = true;
      }
    }
    if (!dependent)
      out.basis.push_back(static_cast<int>(i));
  }
  out.rank = static_cast<int>(out.basis.size());
  return out;
}

std::string QuadTower::elem_str(const Elem &a) const {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i)
      s += ", ";
    s += rat_to_string(a[i]);
  }
  return s + "]";
}

} // namespace arbordim
