#ifndef ARBORDIM_GALOIS_HPP
#define ARBORDIM_GALOIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "arbordim/dimension.hpp"
#include "arbordim/ratmap.hpp"
#include "arbordim/tower.hpp"
#include "arbordim/tree.hpp"

namespace arbordim {

// A point of P^1 over a quadratic tower: affine value or infinity.
struct TowerPoint {
  bool infinite = false;
  QuadTower::Elem value; // meaningful when finite

  static TowerPoint at_infinity(const QuadTower &t) { return {true, t.zero()}; }
  static TowerPoint affine(QuadTower::Elem v) { return {false, std::move(v)}; }
};

struct GaloisOptions {
  std::vector<mpq_class> initial_radicands; // simulated base-field extension
  TowerCaps tower_caps;
  Caps poly_caps;
};

// One fiber of a degree-2 map over a tower point; may extend the tower.
std::vector<std::pair<TowerPoint, int>> preimage_points(const RationalMap &f,
                                                        const TowerPoint &beta, QuadTower &tower,
                                                        const TowerCaps &caps = {});

struct GaloisResult {
  DegreeSequence seq;   // deg_n = [K_n : K_0], K_0 = Q(initial radicands)
  FiniteTree tree;      // exact preimage tree through the completed levels
  std::vector<std::vector<TowerPoint>> points; // per level, lifted to the final tower
  QuadTower tower;
  bool truncated = false;
  std::string truncation_reason;

  nlohmann::json tree_json() const; // tree_core schema extended with point labels
};

// Exact [K_n : K] for n <= N via level-by-level discriminant ranks, plus the
// labeled preimage tree.
GaloisResult galois_degree_sequence(const RationalMap &f, const ProjPoint &alpha, int N,
                                    const GaloisOptions &opts = {});

struct PeriodicClaimReport {
  int period = 0;
  bool vacuous = false;  // backward orbit equals the cycle
  std::string note;
  struct Location {
    int level = 0;          // level k of the located point
    std::string point;      // printable form
    int branch = -1;        // index of the non-root branch whose subtree reaches it
    int forward_steps = -1; // iterations applied to the branch point
    bool found = false;
  };
  std::vector<Location> locations;
  bool all_located = true;
  std::vector<mpz_class> full_degrees;       // [K_n : Q], n = 0..N
  std::vector<mpz_class> restricted_degrees; // same, with the root branch omitted above level m
  bool degrees_match = true;
  bool holds() const { return vacuous || (all_located && degrees_match); }
  nlohmann::json to_json() const;
};

// Verifies, by exact tower arithmetic, that every non-periodic backward-orbit
// point of an m-periodic base point is reached by forward iteration from a
// branch other than the base point's own, and that omitting that branch's
// radicands does not change the field degree.
PeriodicClaimReport periodic_claim_check(const RationalMap &f, const ProjPoint &alpha, int m,
                                         int N, const GaloisOptions &opts = {});

} // namespace arbordim

#endif
