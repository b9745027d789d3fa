#ifndef ARBORDIM_TOWER_HPP
#define ARBORDIM_TOWER_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace arbordim {

struct TowerCaps {
  int max_levels = 12;      // hard degree cap 2^12
  long coord_bits = 1 << 20; // per-coordinate numerator/denominator bit cap
};

// Iterated quadratic extension of Q.  Elements are coordinate vectors of
// length 2^k over the basis of subset products of the adjoined square roots;
// the basis of the extended tower is (old basis) ++ (old basis) * sqrt(delta),
// so towers extend by zero-padding coordinates.
class QuadTower {
public:
  using Elem = std::vector<mpq_class>;

  QuadTower() = default;

  int levels() const { return static_cast<int>(radicands_.size()); }
  std::size_t dim() const { return std::size_t(1) << levels(); }
  mpz_class degree() const;
  // radicand i as stored (coordinates over the level-i subtower)
  const std::vector<Elem> &radicands() const { return radicands_; }

  Elem zero() const { return Elem(dim(), 0); }
  Elem one() const { return from_rational(1); }
  Elem from_rational(const mpq_class &v) const;
  // pad an element of a smaller (prefix) tower to the current dimension
  Elem lift(const Elem &old) const;

  bool is_zero(const Elem &a) const;
  bool equal(const Elem &a, const Elem &b) const { return a == b; }
  Elem add(const Elem &a, const Elem &b) const;
  Elem sub(const Elem &a, const Elem &b) const;
  Elem neg(const Elem &a) const;
  Elem mul(const Elem &a, const Elem &b) const;
  Elem inverse(const Elem &a) const; // throws on zero
  Elem div(const Elem &a, const Elem &b) const { return mul(a, inverse(b)); }
  Elem scale(const Elem &a, const mpq_class &c) const;

  long max_coord_bits(const Elem &a) const;

  // Some w with w*w == z, when one exists.  Total; the returned root is
  // verified by exact multiplication before being returned.
  std::optional<Elem> is_square(const Elem &z) const;

  struct AdjoinResult {
    bool doubled = false;
    Elem root; // in the (possibly extended) tower
  };
  // If delta is a square, returns its root in the same field; otherwise
  // extends the tower by one level.  delta != 0 required.  Rational square
  // factors are stripped before adjoining (trial division to 10^6).
  AdjoinResult adjoin_sqrt(const Elem &delta, const TowerCaps &caps = {});

  struct Relation {
    int index;               // position of the dependent element
    std::vector<int> basis_subset; // positions of basis elements in its relation
    Elem witness;            // witness^2 == elem * prod(subset)
  };
  struct RankResult {
    int rank = 0;
    std::vector<int> basis; // positions of independent elements, in input order
    std::vector<Relation> relations;
  };
  // Gaussian elimination in the square-class group: each element is tested
  // against all subset products of the running independent set via is_square.
  RankResult square_class_rank(const std::vector<Elem> &elems) const;

  std::string elem_str(const Elem &a) const;

private:
  std::vector<Elem> radicands_;

  Elem mul_level(int level, const Elem &a, const Elem &b) const;
  Elem inv_level(int level, const Elem &a) const;
  std::optional<Elem> sqrt_level(int level, const Elem &z) const;
};

// strips the largest square rational factor found by trial division (plus a
// final perfect-square check on the cofactor): returns (reduced, s) with
// input == s^2 * reduced
std::pair<mpq_class, mpq_class> strip_square_factor(const mpq_class &v);

} // namespace arbordim

#endif
