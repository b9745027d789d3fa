#include "arbordim/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arbordim {

namespace {
mpz_class zpow(const mpz_class &b, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}
} // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class &c) { return IntPoly({c}); }
IntPoly IntPoly::x() { return IntPoly({0, 1}); }

IntPoly IntPoly::from_longs(std::vector<long> coeffs) {
  std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

const mpz_class &IntPoly::coeff(int i) const {
  static const mpz_class zero = 0;
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return zero;
  return c_[i];
}

const mpz_class &IntPoly::lead() const {
  if (c_.empty())
    throw std::invalid_argument("lead: zero polynomial");
  return c_.back();
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto &v : c_)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly IntPoly::normalized() const {
  if (is_zero())
    return IntPoly();
  mpz_class g = content();
  if (lead() < 0)
    g = -g;
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    out[i] = c_[i] / g;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1)
    return IntPoly();
  std::vector<mpz_class> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    out[i - 1] = mpz_class(static_cast<unsigned long>(i)) * c_[i];
  return IntPoly(std::move(out));
}

mpq_class IntPoly::eval(const mpq_class &x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * x + c_[i];
  return acc;
}

mpz_class IntPoly::eval_homogeneous(const mpz_class &a, const mpz_class &b, int total) const {
  if (degree() > total)
    throw std::invalid_argument("eval_homogeneous: degree exceeds total");
  mpz_class acc = 0;
  for (int i = 0; i <= degree(); ++i)
    if (coeff(i) != 0)
      acc += coeff(i) * zpow(a, i) * zpow(b, total - i);
  return acc;
}

long IntPoly::max_coeff_bits() const {
  long m = 0;
  for (const auto &v : c_)
    m = std::max(m, static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)));
  return m;
}

std::string IntPoly::str() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class &v = coeff(i);
    if (v == 0)
      continue;
    mpz_class av = abs(v);
    if (first) {
      if (v < 0)
        os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (i == 0 || av != 1)
      os << av.get_str();
    if (i > 0) {
      if (av != 1)
        os << "*";
      os << "x";
      if (i > 1)
        os << "^" << i;
    }
  }
  return os.str();
}

IntPoly operator+(const IntPoly &a, const IntPoly &b) {
  std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly &a, const IntPoly &b) {
  std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly &a, const IntPoly &b) {
  if (a.is_zero() || b.is_zero())
    return IntPoly();
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const mpz_class &k, const IntPoly &a) {
  std::vector<mpz_class> out(a.c_);
  for (auto &v : out)
    v *= k;
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly &a) { return mpz_class(-1) * a; }

IntPoly pow_poly(const IntPoly &a, unsigned e) {
  IntPoly r = IntPoly::constant(1);
  IntPoly base = a;
  while (e) {
    if (e & 1)
      r = r * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return r;
}

IntPoly compose_poly(const IntPoly &p, const IntPoly &q) {
  IntPoly acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * q;
    acc = acc + IntPoly::constant(p.coeff(i));
  }
  return acc;
}

IntPoly compose_rational_numerator(const IntPoly &p, const IntPoly &n, const IntPoly &d) {
  const int dp = p.degree();
  if (dp < 0)
    return IntPoly();
  IntPoly acc;
  for (int i = dp; i >= 0; --i) {
    acc = acc * n;
    if (p.coeff(i) != 0)
      acc = acc + p.coeff(i) * pow_poly(d, static_cast<unsigned>(dp - i));
  }
  return acc;
}

namespace {
// pseudo-remainder: lead(b)^k * a mod b for a suitable k
IntPoly pseudo_rem(IntPoly a, const IntPoly &b) {
  if (b.is_zero())
    throw std::invalid_argument("pseudo_rem: division by zero polynomial");
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    int k = a.degree() - db;
    mpz_class la = a.lead();
    std::vector<mpz_class> shifted(static_cast<std::size_t>(k), 0);
    for (int i = 0; i <= db; ++i)
      shifted.push_back(la * b.coeff(i));
    a = b.lead() * a - IntPoly(std::move(shifted));
  }
  return a;
}
} // namespace

IntPoly gcd_poly(const IntPoly &a, const IntPoly &b) {
  IntPoly r0 = a.normalized(), r1 = b.normalized();
  if (r0.is_zero())
    return r1;
  if (r1.is_zero())
    return r0;
  if (r0.degree() < r1.degree())
    std::swap(r0, r1);
  while (!r1.is_zero()) {
    IntPoly r2 = pseudo_rem(r0, r1).normalized();
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0;
}

IntPoly divexact_poly(const IntPoly &a, const IntPoly &b) {
  if (b.is_zero())
    throw std::invalid_argument("divexact_poly: division by zero");
  if (a.is_zero())
    return IntPoly();
  if (a.degree() < b.degree())
    throw std::invalid_argument("divexact_poly: not divisible");
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  IntPoly rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    mpz_class qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.lead().get_mpz_t(), b.lead().get_mpz_t());
    if (r != 0)
      throw std::invalid_argument("divexact_poly: not divisible (leading coefficient)");
    int k = rem.degree() - b.degree();
    q[static_cast<std::size_t>(k)] = qc;
    std::vector<mpz_class> term(static_cast<std::size_t>(k), 0);
    for (int i = 0; i <= b.degree(); ++i)
      term.push_back(qc * b.coeff(i));
    rem = rem - IntPoly(std::move(term));
  }
  if (!rem.is_zero())
    throw std::invalid_argument("divexact_poly: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly squarefree_part(const IntPoly &p) {
  if (p.is_zero())
    return IntPoly();
  IntPoly np = p.normalized();
  if (np.degree() == 0)
    return np;
  IntPoly g = gcd_poly(np, np.derivative());
  if (g.degree() == 0)
    return np;
  return divexact_poly(np, g).normalized();
}

bool is_squarefree(const IntPoly &p) {
  if (p.is_zero())
    return false;
  if (p.degree() == 0)
    return true;
  return gcd_poly(p, p.derivative()).degree() == 0;
}

std::vector<mpq_class> rational_roots(const IntPoly &p) {
  std::vector<mpq_class> roots;
  IntPoly q = p.normalized();
  if (q.is_zero() || q.degree() == 0)
    return roots;
  int k = 0;
  while (q.coeff(k) == 0)
    ++k;
  if (k > 0) {
    roots.push_back(0);
    std::vector<mpz_class> shifted(q.coeffs().begin() + k, q.coeffs().end());
    q = IntPoly(std::move(shifted));
  }
  if (q.degree() == 0) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  auto divisors = [](const mpz_class &n) {
    std::vector<mpz_class> out;
    mpz_class an = abs(n);
    for (mpz_class i = 1; i * i <= an; ++i)
      if (mpz_divisible_p(an.get_mpz_t(), i.get_mpz_t())) {
        out.push_back(i);
        out.push_back(an / i);
      }
    return out;
  };
  auto consider = [&](const mpq_class &cand) {
    if (q.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
      roots.push_back(cand);
  };
  if (mpz_sizeinbase(q.coeff(0).get_mpz_t(), 2) > 64 ||
      mpz_sizeinbase(q.lead().get_mpz_t(), 2) > 64) {
    // trial-division on huge constants is pointless; probe small candidates only
    for (long a = -64; a <= 64; ++a)
      for (long b = 1; b <= 8; ++b) {
        mpq_class cand(a, b);
        cand.canonicalize();
        consider(cand);
      }
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  for (const auto &r : divisors(q.coeff(0)))
    for (const auto &s : divisors(q.lead()))
      for (int sign = -1; sign <= 1; sign += 2) {
        mpq_class cand(sign * r, s);
        cand.canonicalize();
        consider(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace arbordim
