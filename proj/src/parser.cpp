#include "arbordim/parser.hpp"

#include "arbordim/errors.hpp"

#include <cctype>

namespace arbordim {

namespace {

// rational function value with exact reduction on every operation
struct RatFunc {
  IntPoly num = IntPoly::constant(0);
  IntPoly den = IntPoly::constant(1);

  static RatFunc constant(const mpz_class &c) { return {IntPoly::constant(c), IntPoly::constant(1)}; }
  static RatFunc variable() { return {IntPoly::x(), IntPoly::constant(1)}; }

  void reduce() {
    if (num.is_zero()) {
      den = IntPoly::constant(1);
      return;
    }
    IntPoly g = gcd_poly(num, den);
    if (g.degree() > 0) {
      num = divexact_poly(num, g);
      den = divexact_poly(den, g);
    }
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
    if (den.lead() < 0)
      c = -c;
    std::vector<mpz_class> nn(num.coeffs()), dd(den.coeffs());
    for (auto &v : nn)
      v /= c;
    for (auto &v : dd)
      v /= c;
    num = IntPoly(std::move(nn));
    den = IntPoly(std::move(dd));
  }
};

RatFunc add(RatFunc a, RatFunc b, int sign) {
  RatFunc r;
  r.num = sign > 0 ? a.num * b.den + b.num * a.den : a.num * b.den - b.num * a.den;
  r.den = a.den * b.den;
  r.reduce();
  return r;
}

RatFunc mul(RatFunc a, RatFunc b) {
  RatFunc r{a.num * b.num, a.den * b.den};
  r.reduce();
  return r;
}

RatFunc div(RatFunc a, RatFunc b, std::size_t pos) {
  if (b.num.is_zero())
    throw parse_error("division by zero", pos);
  RatFunc r{a.num * b.den, a.den * b.num};
  r.reduce();
  return r;
}

struct Parser {
  const std::string &s;
  std::size_t pos = 0;
  bool saw_inf = false;

  explicit Parser(const std::string &text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw parse_error("expected an integer", start);
    return mpz_class(s.substr(start, pos - start));
  }

  RatFunc atom() {
    skip_ws();
    if (pos >= s.size())
      throw parse_error("unexpected end of input", pos);
    char c = s[pos];
    if (c == '(') {
      std::size_t open = pos++;
      RatFunc e = expr();
      if (!accept(')'))
        throw parse_error("unbalanced parenthesis", open);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RatFunc::constant(integer());
    if (c == 'x' && (pos + 1 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
      ++pos;
      return RatFunc::variable();
    }
    if (s.compare(pos, 3, "inf") == 0) {
      pos += 3;
      saw_inf = true;
      return RatFunc::constant(0); // placeholder; only valid as a whole point
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos);
  }

  RatFunc power() {
    RatFunc base = atom();
    while (peek('^')) {
      std::size_t caret = pos++;
      skip_ws();
      bool neg = accept('-');
      mpz_class e = integer();
      if (!e.fits_sint_p() || e > 64)
        throw parse_error("exponent out of range", caret);
      long ei = e.get_si();
      RatFunc r{pow_poly(base.num, static_cast<unsigned>(ei)), pow_poly(base.den, static_cast<unsigned>(ei))};
      if (neg) {
        if (base.num.is_zero())
          throw parse_error("zero to a negative power", caret);
        std::swap(r.num, r.den);
      }
      r.reduce();
      base = std::move(r);
    }
    return base;
  }

  RatFunc unary() {
    skip_ws();
    if (accept('-')) {
      RatFunc v = unary();
      v.num = -v.num;
      v.reduce();
      return v;
    }
    return power();
  }

  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos;
        v = mul(v, unary());
      } else if (peek('/')) {
        std::size_t slash = pos++;
        v = div(v, unary(), slash);
      } else {
        return v;
      }
    }
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (peek('+')) {
        ++pos;
        v = add(v, term(), +1);
      } else if (peek('-')) {
        ++pos;
        v = add(v, term(), -1);
      } else {
        return v;
      }
    }
  }

  RatFunc parse_all() {
    RatFunc v = expr();
    skip_ws();
    if (pos != s.size())
      throw parse_error("trailing input", pos);
    return v;
  }
};

} // namespace

RationalMap parse_map(const std::string &text) {
  Parser p(text);
  RatFunc v = p.parse_all();
  if (p.saw_inf)
    throw parse_error("'inf' is not valid inside a map expression", 0);
  if (v.num.is_zero())
    throw parse_error("the zero map is not a self-map of P^1", 0);
  return RationalMap(v.num, v.den);
}

ProjPoint parse_point(const std::string &text) {
  Parser p(text);
  RatFunc v = p.parse_all();
  if (p.saw_inf) {
    // 'inf' must be the entire expression
    std::size_t nonws = 0;
    std::string t;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        t += c, ++nonws;
    if (t != "inf")
      throw parse_error("'inf' must stand alone in a point expression", 0);
    return ProjPoint::infinity();
  }
  if (v.num.degree() > 0 || v.den.degree() > 0)
    throw parse_error("point expression must be constant (no 'x')", 0);
  return ProjPoint(v.num.is_zero() ? mpz_class(0) : v.num.coeff(0), v.den.coeff(0));
}

} // namespace arbordim
