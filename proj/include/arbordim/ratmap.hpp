#ifndef ARBORDIM_RATMAP_HPP
#define ARBORDIM_RATMAP_HPP

#include <optional>
#include <string>
#include <vector>

#include "arbordim/poly.hpp"
#include "arbordim/tree.hpp"

namespace arbordim {

// P^1(Q): (x : y) with gcd(x,y) = 1, y > 0, or (1 : 0) for infinity.
struct ProjPoint {
  mpz_class x = 0;
  mpz_class y = 1;

  ProjPoint() = default;
  ProjPoint(mpz_class px, mpz_class py);
  static ProjPoint infinity() { return ProjPoint(1, 0); }
  static ProjPoint from_rational(const mpq_class &v);

  bool is_infinity() const { return y == 0; }
  mpq_class affine() const; // throws on infinity
  std::string str() const;
  friend bool operator==(const ProjPoint &a, const ProjPoint &b) { return a.x == b.x && a.y == b.y; }
};

struct Caps {
  long coeff_bits = 1 << 20; // per-coefficient cap for polynomial data
};

// Degree-d self-map of P^1 as a coprime pair of integer polynomials.
class RationalMap {
public:
  RationalMap(IntPoly num, IntPoly den); // reduces to coprime normal form
  static RationalMap identity();

  const IntPoly &num() const { return num_; }
  const IntPoly &den() const { return den_; }
  int degree() const { return deg_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  ProjPoint eval(const ProjPoint &p) const;
  std::string str() const;
  friend bool operator==(const RationalMap &a, const RationalMap &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  IntPoly num_, den_;
  int deg_;
};

RationalMap iterate_map(const RationalMap &f, int n, const Caps &caps = {});

struct CriticalLocus {
  IntPoly wronskian;        // N'D - ND', normalized; roots are the finite critical points
  bool infinity_critical = false;
  int infinity_multiplicity = 0; // 2d-2 - deg(wronskian)
};
CriticalLocus critical_points(const RationalMap &f);

// smallest m <= depth with f^m(critical point) = alpha, if any
std::optional<int> is_postcritical(const RationalMap &f, const ProjPoint &alpha, int depth,
                                   const Caps &caps = {});

// minimal period m <= max_period with f^m(alpha) = alpha, if any
std::optional<int> is_periodic(const RationalMap &f, const ProjPoint &alpha, int max_period,
                               const Caps &caps = {});

struct PreimagePoly {
  IntPoly poly;               // roots (with multiplicity) are the finite points of f^-n(alpha)
  int infinity_multiplicity;  // multiplicity of infinity in the fiber
};
PreimagePoly preimage_polynomial(const RationalMap &f, int n, const ProjPoint &alpha,
                                 const Caps &caps = {});

// alpha exceptional iff the union of f^-n(alpha) for n <= 2 has at most 2 points
bool is_exceptional(const RationalMap &f, const ProjPoint &alpha, const Caps &caps = {});

// Shape of the preimage tree at finite depth.  Level sizes come from radical
// degrees; per-level incomplete counts are derived where decidable (always
// for d = 2; for d >= 3 only when the level is complete).  The exact edge
// structure is available here only in the complete case; the quadratic tower
// layer produces it for d = 2.
struct ShapeReport {
  int d = 2;
  int depth = 0;
  std::vector<long> level_sizes;                 // |L_0| .. |L_depth|
  std::vector<long> child_deficiency;            // d*|L_n| - |L_{n+1}| for n < depth
  std::vector<std::optional<long>> incomplete;   // I_n where decidable, n < depth
  bool complete_through_depth = false;
  std::optional<FiniteTree> exact_tree;          // present iff complete through depth
  std::string edge_structure_note;               // set when undeterminable
};
ShapeReport tree_shape(const RationalMap &f, const ProjPoint &alpha, int depth,
                       const Caps &caps = {});

} // namespace arbordim

#endif
