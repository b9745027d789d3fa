#ifndef ARBORDIM_TREE_HPP
#define ARBORDIM_TREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace arbordim {

// Address of a vertex: level plus position within the level.
struct VertexRef {
  int level = 0;
  int index = 0;
  friend bool operator==(const VertexRef &, const VertexRef &) = default;
};

struct IncompleteCounts {
  std::vector<long> per_level; // levels 0 .. height-1
  long total = 0;
};

// Finite d-ary rooted tree with explicit levels.  Vertices are stored
// level-by-level in insertion order; children lists are ordered and refer to
// positions within the next level.  Immutable after construction.
class FiniteTree {
public:
  struct Node {
    std::vector<int> children; // indices into the next level
    int parent = -1;           // index into the previous level (-1 for root)
  };

  // Builds from per-level child lists: children[k][i] lists the level-(k+1)
  // indices of the children of vertex i at level k.  children.size() ==
  // height; level sizes are inferred.  Validates all invariants.
  FiniteTree(int arity_bound, std::vector<std::vector<std::vector<int>>> children);

  static FiniteTree complete(int d, int n);
  static FiniteTree single_vertex(int d);

  int arity() const { return d_; }
  int height() const { return height_; }
  int level_size(int k) const { return static_cast<int>(levels_[k].size()); }
  long vertex_count() const;
  const Node &node(int level, int index) const { return levels_[level][index]; }
  const std::vector<int> &children(int level, int index) const {
    return levels_[level][index].children;
  }
  int parent(int level, int index) const { return levels_[level][index].parent; }

  FiniteTree truncate(int n) const;
  IncompleteCounts incomplete_counts() const;
  bool is_complete() const;

  // Per-vertex shape classes: shape_id(k,i) == shape_id(k,j) iff the subtrees
  // below the two vertices are isomorphic.  Ids are dense per level.
  const std::vector<std::vector<int>> &shape_ids() const;
  // Canonical form of the whole tree: equal strings iff isomorphic as rooted
  // trees (ignores child order).
  std::string canonical_signature() const;

  bool isomorphic_to(const FiniteTree &other) const;
  // Structural equality (same child lists in the same order).
  friend bool operator==(const FiniteTree &a, const FiniteTree &b);

  nlohmann::json to_json() const;
  static FiniteTree from_json(const nlohmann::json &j);
  std::string to_dot(int max_vertices = 200) const;

private:
  int d_;
  int height_;
  std::vector<std::vector<Node>> levels_;
  mutable std::vector<std::vector<int>> shape_ids_; // lazily computed
  void validate() const;
};

FiniteTree complete_tree(int d, int n);
FiniteTree truncate(const FiniteTree &t, int n);
IncompleteCounts incomplete_counts(const FiniteTree &t);

} // namespace arbordim

#endif
