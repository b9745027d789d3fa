#include "arbordim/ratmap.hpp"

#include "arbordim/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace arbordim {

ProjPoint::ProjPoint(mpz_class px, mpz_class py) : x(std::move(px)), y(std::move(py)) {
  if (x == 0 && y == 0)
    throw std::invalid_argument("ProjPoint: (0:0) is not a point");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  x /= g;
  y /= g;
  if (y < 0) {
    x = -x;
    y = -y;
  } else if (y == 0) {
    x = 1;
  }
}

ProjPoint ProjPoint::from_rational(const mpq_class &v) {
  return ProjPoint(v.get_num(), v.get_den());
}

mpq_class ProjPoint::affine() const {
  if (is_infinity())
    throw std::invalid_argument("ProjPoint: infinity has no affine value");
  mpq_class r(x, y);
  r.canonicalize();
  return r;
}

std::string ProjPoint::str() const {
  if (is_infinity())
    return "inf";
  if (y == 1)
    return x.get_str();
  return x.get_str() + "/" + y.get_str();
}

RationalMap::RationalMap(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("RationalMap: zero denominator");
  if (num_.is_zero())
    throw std::invalid_argument("RationalMap: zero map is not a self-map of P^1");
  IntPoly g = gcd_poly(num_, den_);
  if (g.degree() > 0) {
    num_ = divexact_poly(num_, g);
    den_ = divexact_poly(den_, g);
  }
  // joint content and sign normal form (denominator lead positive)
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
  if (den_.lead() < 0)
    c = -c;
  std::vector<mpz_class> nn(num_.coeffs()), dd(den_.coeffs());
  for (auto &v : nn)
    v /= c;
  for (auto &v : dd)
    v /= c;
  num_ = IntPoly(std::move(nn));
  den_ = IntPoly(std::move(dd));
  deg_ = std::max(num_.degree(), den_.degree());
}

RationalMap RationalMap::identity() { return RationalMap(IntPoly::x(), IntPoly::constant(1)); }

ProjPoint RationalMap::eval(const ProjPoint &p) const {
  mpz_class nv = num_.eval_homogeneous(p.x, p.y, deg_);
  mpz_class dv = den_.eval_homogeneous(p.x, p.y, deg_);
  return ProjPoint(nv, dv);
}

std::string RationalMap::str() const {
  if (is_polynomial() && den_.coeff(0) == 1)
    return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {
void check_caps(const IntPoly &p, const Caps &caps, const char *who) {
  if (p.max_coeff_bits() > caps.coeff_bits)
    throw resource_limit_error(std::string(who) + ": coefficient size exceeded " +
                               std::to_string(caps.coeff_bits) + " bits");
}
} // namespace

RationalMap iterate_map(const RationalMap &f, int n, const Caps &caps) {
  if (n < 0)
    throw std::invalid_argument("iterate: need n >= 0");
  const int d = f.degree();
  RationalMap r = RationalMap::identity();
  for (int i = 0; i < n; ++i) {
    // homogenize both coordinates of f to degree d before substituting
    IntPoly num = compose_rational_numerator(f.num(), r.num(), r.den()) *
                  pow_poly(r.den(), static_cast<unsigned>(d - f.num().degree()));
    IntPoly den = compose_rational_numerator(f.den(), r.num(), r.den()) *
                  pow_poly(r.den(), static_cast<unsigned>(d - f.den().degree()));
    r = RationalMap(std::move(num), std::move(den));
    check_caps(r.num(), caps, "iterate");
    check_caps(r.den(), caps, "iterate");
  }
  return r;
}

CriticalLocus critical_points(const RationalMap &f) {
  if (f.degree() < 2)
    throw std::invalid_argument("critical_points: need degree >= 2");
  IntPoly w = f.num().derivative() * f.den() - f.num() * f.den().derivative();
  CriticalLocus out;
  int full = 2 * f.degree() - 2;
  out.infinity_multiplicity = full - w.degree();
  out.infinity_critical = out.infinity_multiplicity > 0;
  out.wronskian = w.normalized();
  return out;
}

std::optional<int> is_postcritical(const RationalMap &f, const ProjPoint &alpha, int depth,
                                   const Caps &caps) {
  if (depth < 1)
    throw std::invalid_argument("is_postcritical: need depth >= 1");
  CriticalLocus crit = critical_points(f);
  for (int m = 1; m <= depth; ++m) {
    PreimagePoly pm = preimage_polynomial(f, m, alpha, caps);
    if (crit.infinity_critical && pm.infinity_multiplicity > 0)
      return m;
    if (!crit.wronskian.is_zero() && crit.wronskian.degree() > 0 &&
        gcd_poly(crit.wronskian, pm.poly).degree() > 0)
      return m;
  }
  return std::nullopt;
}

std::optional<int> is_periodic(const RationalMap &f, const ProjPoint &alpha, int max_period,
                               const Caps &caps) {
  if (max_period < 1)
    throw std::invalid_argument("is_periodic: need max_period >= 1");
  std::vector<ProjPoint> orbit = {alpha};
  ProjPoint cur = alpha;
  for (int m = 1; m <= max_period; ++m) {
    cur = f.eval(cur);
    long bits = std::max(mpz_sizeinbase(cur.x.get_mpz_t(), 2), mpz_sizeinbase(cur.y.get_mpz_t(), 2));
    if (bits > caps.coeff_bits)
      throw resource_limit_error("is_periodic: orbit coordinates exceeded the bit cap");
    if (cur == alpha)
      return m;
    // revisiting any earlier point means alpha is strictly preperiodic
    if (std::find(orbit.begin(), orbit.end(), cur) != orbit.end())
      return std::nullopt;
    orbit.push_back(cur);
  }
  return std::nullopt;
}

PreimagePoly preimage_polynomial(const RationalMap &f, int n, const ProjPoint &alpha,
                                 const Caps &caps) {
  if (n < 0)
    throw std::invalid_argument("preimage_polynomial: need n >= 0");
  RationalMap fn = iterate_map(f, n, caps);
  long dn = 1;
  for (int i = 0; i < n; ++i)
    dn *= f.degree();
  // b*N_n - a*D_n, with the homogeneous convention at degree d^n
  IntPoly p = alpha.y * fn.num() - alpha.x * fn.den();
  PreimagePoly out;
  if (p.is_zero())
    throw std::invalid_argument("preimage_polynomial: fiber polynomial vanished (not a proper map)");
  out.infinity_multiplicity = static_cast<int>(dn) - p.degree();
  out.poly = p.normalized();
  check_caps(out.poly, caps, "preimage_polynomial");
  return out;
}

bool is_exceptional(const RationalMap &f, const ProjPoint &alpha, const Caps &caps) {
  // distinct points of {alpha} ∪ f^-1(alpha) ∪ f^-2(alpha)
  IntPoly prod = IntPoly::constant(1);
  bool has_inf = false;
  if (alpha.is_infinity())
    has_inf = true;
  else {
    std::vector<mpz_class> lin = {-alpha.x, alpha.y};
    prod = prod * IntPoly(std::move(lin));
  }
  for (int n = 1; n <= 2; ++n) {
    PreimagePoly pn = preimage_polynomial(f, n, alpha, caps);
    prod = prod * pn.poly;
    if (pn.infinity_multiplicity > 0)
      has_inf = true;
  }
  IntPoly rad = squarefree_part(prod);
  long count = rad.degree() + (has_inf ? 1 : 0);
  return count <= 2;
}

ShapeReport tree_shape(const RationalMap &f, const ProjPoint &alpha, int depth, const Caps &caps) {
  if (depth < 0)
    throw std::invalid_argument("tree_shape: need depth >= 0");
  if (f.degree() < 2)
    throw std::invalid_argument("tree_shape: need a map of degree >= 2");
  ShapeReport out;
  out.d = f.degree();
  out.depth = depth;
  out.level_sizes.push_back(1);
  for (int n = 1; n <= depth; ++n) {
    PreimagePoly pn = preimage_polynomial(f, n, alpha, caps);
    IntPoly rad = squarefree_part(pn.poly);
    long sz = rad.degree() + (pn.infinity_multiplicity > 0 ? 1 : 0);
    out.level_sizes.push_back(sz);
  }
  out.complete_through_depth = true;
  for (int n = 0; n < depth; ++n) {
    long deficiency = static_cast<long>(out.d) * out.level_sizes[n] - out.level_sizes[n + 1];
    out.child_deficiency.push_back(deficiency);
    if (deficiency != 0)
      out.complete_through_depth = false;
    if (out.d == 2)
      out.incomplete.push_back(deficiency); // each incomplete vertex loses exactly one child
    else if (deficiency == 0)
      out.incomplete.push_back(0);
    else
      out.incomplete.push_back(std::nullopt);
  }
  if (out.complete_through_depth)
    out.exact_tree = complete_tree(out.d, depth);
  else if (out.d > 2)
    out.edge_structure_note = "edge structure undeterminable at this degree";
  else
    out.edge_structure_note = "exact edge structure available through the quadratic tower";
  return out;
}

} // namespace arbordim
