#include "arbordim/chebyshev.hpp"

#include <stdexcept>

namespace arbordim {

IntPoly chebyshev(int d) {
  if (d < 0)
    throw std::invalid_argument("chebyshev: need d >= 0");
  IntPoly prev = IntPoly::constant(2); // T_0
  if (d == 0)
    return prev;
  IntPoly cur = IntPoly::x(); // T_1
  for (int k = 1; k < d; ++k) {
    IntPoly next = IntPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool chebyshev_laurent_identity(int d) {
  IntPoly td = chebyshev(d);
  // x^d * T_d((x^2+1)/x) as a polynomial: sum t_i (x^2+1)^i x^(d-i)
  IntPoly lhs;
  IntPoly u = IntPoly::from_longs({1, 0, 1}); // x^2 + 1
  for (int i = 0; i <= td.degree(); ++i) {
    if (td.coeff(i) == 0)
      continue;
    IntPoly term = td.coeff(i) * pow_poly(u, static_cast<unsigned>(i));
    std::vector<mpz_class> shift(static_cast<std::size_t>(d - i), 0);
    shift.insert(shift.end(), term.coeffs().begin(), term.coeffs().end());
    lhs = lhs + IntPoly(std::move(shift));
  }
  std::vector<mpz_class> rhs_c(static_cast<std::size_t>(2 * d) + 1, 0);
  rhs_c[0] = 1;
  rhs_c[static_cast<std::size_t>(2 * d)] = 1;
  return lhs == IntPoly(std::move(rhs_c));
}

ChebyshevReport chebyshev_identities(int dmax) {
  if (dmax < 2)
    throw std::invalid_argument("chebyshev_identities: need dmax >= 2");
  ChebyshevReport rep;
  rep.dmax = dmax;
  auto record = [&rep](bool ok, const std::string &what) {
    ++rep.identities_checked;
    if (!ok) {
      rep.all_hold = false;
      rep.failures.push_back(what);
    }
  };

  for (int d = 1; d <= dmax; ++d)
    record(chebyshev_laurent_identity(d), "laurent d=" + std::to_string(d));

  for (int d = 1; d <= dmax; ++d) {
    // T_d(-x) = (-1)^d T_d(x)
    IntPoly td = chebyshev(d);
    IntPoly neg = compose_poly(td, IntPoly::from_longs({0, -1}));
    IntPoly expect = (d % 2 == 0) ? td : -td;
    record(neg == expect, "parity d=" + std::to_string(d));
  }

  for (int d = 2; d <= dmax; ++d)
    for (int e = 2; d * e <= dmax; ++e)
      record(chebyshev(d * e) == compose_poly(chebyshev(d), chebyshev(e)),
             "nesting d=" + std::to_string(d) + " e=" + std::to_string(e));

  for (int d = 3; d * d <= dmax; d += 2) {
    // (-T_d)(-T_d(x)) = T_{d^2}(x) for odd d
    IntPoly f = -chebyshev(d);
    record(compose_poly(f, f) == chebyshev(d * d), "odd square d=" + std::to_string(d));
  }
  return rep;
}

} // namespace arbordim
