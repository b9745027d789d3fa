#ifndef ARBORDIM_PORTRAIT_HPP
#define ARBORDIM_PORTRAIT_HPP

#include <memory>
#include <vector>

#include "json.hpp"

#include "arbordim/tree.hpp"

namespace arbordim {

// A tree automorphism stored as one child permutation per non-leaf vertex
// (a portrait).  perms[k][i][j] is the slot that the j-th child of vertex
// (k,i) is sent to under the automorphism.  The constructor rejects
// permutations that move a child onto a slot of different subtree shape.
class TreePortrait {
public:
  using Perms = std::vector<std::vector<std::vector<int>>>;

  TreePortrait(std::shared_ptr<const FiniteTree> tree, Perms perms);
  static TreePortrait identity(std::shared_ptr<const FiniteTree> tree);

  const FiniteTree &tree() const { return *tree_; }
  const std::shared_ptr<const FiniteTree> &tree_ptr() const { return tree_; }
  const Perms &perms() const { return perms_; }

  // Per-level vertex maps induced by the portrait: vertex_map()[k][i] is the
  // image index of vertex (k,i).
  const std::vector<std::vector<int>> &vertex_map() const;
  VertexRef apply(VertexRef v) const;

  TreePortrait inverse() const;
  TreePortrait restrict_to(int n) const;
  bool is_identity() const;

  // Canonical flat encoding, usable as a dedup key within one tree.
  std::vector<int> key() const;

  friend TreePortrait compose(const TreePortrait &a, const TreePortrait &b);
  friend bool operator==(const TreePortrait &a, const TreePortrait &b);

  nlohmann::json to_json() const;
  static TreePortrait from_json(std::shared_ptr<const FiniteTree> tree, const nlohmann::json &j);

private:
  std::shared_ptr<const FiniteTree> tree_;
  Perms perms_;
  mutable std::vector<std::vector<int>> vmap_;
  void check_legal() const;
};

// acts as a after b on vertices: (a∘b)(v) = a(b(v))
TreePortrait compose(const TreePortrait &a, const TreePortrait &b);
TreePortrait restrict_portrait(const TreePortrait &p, int n);

} // namespace arbordim

#endif
