#ifndef ARBORDIM_GROUP_HPP
#define ARBORDIM_GROUP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "arbordim/portrait.hpp"
#include "arbordim/tree.hpp"

namespace arbordim {

// |Aut(T_n^com)| = d!^((d^n-1)/(d-1))
mpz_class aut_order_formula(int d, int n);

// Exact |Aut(T)| for an arbitrary finite d-ary tree: the product over
// vertices of the number of shape-preserving child permutations.
mpz_class aut_order_of_tree(const FiniteTree &t);

// A fully enumerated group of tree automorphisms.  Element 0 is always the
// identity.  Enumeration order is deterministic.
class PortraitGroup {
public:
  static PortraitGroup trivial(std::shared_ptr<const FiniteTree> tree);
  static PortraitGroup from_elements(std::shared_ptr<const FiniteTree> tree,
                                     std::vector<TreePortrait> elems);

  const FiniteTree &tree() const { return *tree_; }
  const std::shared_ptr<const FiniteTree> &tree_ptr() const { return tree_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<TreePortrait> &elements() const { return elems_; }
  const TreePortrait &element(std::size_t i) const { return elems_[i]; }
  std::optional<std::size_t> index_of(const TreePortrait &p) const;
  bool is_abelian() const;

  // Cayley table on element indices (built lazily; requires order <= 65535).
  const std::vector<std::vector<std::uint16_t>> &cayley() const;
  const std::vector<std::uint16_t> &inverses() const;

  // Image group under restriction to the height-n subtree.
  PortraitGroup restrict_to(int n) const;

  // Partition of the level's vertex indices into group orbits (each orbit
  // sorted; orbits ordered by minimum element).
  std::vector<std::vector<int>> orbits(int level) const;

private:
  PortraitGroup(std::shared_ptr<const FiniteTree> tree, std::vector<TreePortrait> elems)
      : tree_(std::move(tree)), elems_(std::move(elems)) {}
  std::shared_ptr<const FiniteTree> tree_;
  std::vector<TreePortrait> elems_;
  mutable std::vector<std::vector<std::uint16_t>> cayley_;
  mutable std::vector<std::uint16_t> inv_;
};

// Full automorphism group by recursive product over vertices.  Throws
// resource_limit_error when aut_order_of_tree(t) exceeds cap.
PortraitGroup enumerate_aut(std::shared_ptr<const FiniteTree> tree, std::size_t cap = 100000);

// Breadth-first closure of a generating set; throws at cap.
PortraitGroup closure(std::shared_ptr<const FiniteTree> tree,
                      const std::vector<TreePortrait> &gens, std::size_t cap = 100000);

// Quotient of T by the action of G: vertices are G-orbits, edges induced.
FiniteTree quotient_tree(const FiniteTree &t, const PortraitGroup &g);

// Subgroups are index sets into a parent group's element list.
struct Subgroup {
  std::vector<std::uint16_t> elems; // sorted, includes 0 (identity)
  bool abelian = false;
};

// All abelian subgroups, by breadth-first extension of commuting generating
// sets with centralizer pruning.  Requires |G| <= cap (default 2000).
std::vector<Subgroup> enumerate_abelian_subgroups(const PortraitGroup &g, std::size_t cap = 2000);

// Independent oracle: tests every subset of G for being an abelian subgroup.
// Only feasible for tiny groups (|G| <= 20).
std::vector<Subgroup> abelian_subgroups_by_subsets(const PortraitGroup &g);

// All subgroups by subset closure (tiny groups only).
std::vector<Subgroup> all_subgroups_by_subsets(const PortraitGroup &g);

// Largest abelian subgroup order of the symmetric group S_d, 2 <= d <= 8,
// by exhaustive descent through centralizers.
long largest_abelian_order(int d);
// Independent check: plain enumeration of all abelian subgroups of S_d
// (feasible for d <= 6); returns {max order, subgroup count}.
std::pair<long, long> abelian_subgroups_of_symmetric(int d);

struct AbelianBoundReport {
  mpz_class order;   // |G|
  bool abelian = false;
  long incomplete_quotient = 0; // I(T/G)
  long q = 0;                   // largest abelian subgroup order of S_d
  mpz_class bound;              // q^I(T/G)
  bool holds = false;
  nlohmann::json to_json() const;
};

// Checks |G| <= q^I(T/G) for abelian G; throws on non-abelian input.
AbelianBoundReport verify_abelian_bound(const FiniteTree &t, const PortraitGroup &g);

// Embedding of an incomplete tree into the complete tree of the same height
// by appending complete subtrees after the existing children, in order.
struct CompleteEmbedding {
  FiniteTree complete;                        // T_n^com
  std::vector<std::vector<int>> vertex_map;   // original (k,i) -> complete index
};
CompleteEmbedding embed_complete(const FiniteTree &t);
// Extends a portrait on T to the embedding; appended slots map identically
// slot-for-slot, which makes the extension a group homomorphism.
TreePortrait extend_portrait(const TreePortrait &p, const CompleteEmbedding &emb,
                             std::shared_ptr<const FiniteTree> complete_tree);

} // namespace arbordim

#endif
