#include "doctest.h"

#include "arbordim/tree.hpp"

using namespace arbordim;

namespace {
FiniteTree path_tree(int d, int height) {
  std::vector<std::vector<std::vector<int>>> ch(height);
  for (int k = 0; k < height; ++k)
    ch[k] = {{0}};
  return FiniteTree(d, std::move(ch));
}
} // namespace

TEST_CASE("complete tree vertex counts") {
  CHECK(complete_tree(2, 0).vertex_count() == 1);
  CHECK(complete_tree(2, 3).vertex_count() == 15);
  CHECK(complete_tree(3, 2).vertex_count() == 13);
  CHECK_THROWS_AS(complete_tree(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(complete_tree(2, -1), std::invalid_argument);
}

TEST_CASE("truncate") {
  FiniteTree t = complete_tree(2, 3);
  CHECK(truncate(t, 3) == t);
  FiniteTree t1 = truncate(t, 1);
  CHECK(t1 == complete_tree(2, 1));
  CHECK(t1.vertex_count() == 3);
  CHECK(truncate(t, 0).vertex_count() == 1);
  CHECK_THROWS_AS(truncate(t, 4), std::invalid_argument);
  CHECK_THROWS_AS(truncate(t, -1), std::invalid_argument);
}

TEST_CASE("incomplete counts") {
  auto c = incomplete_counts(complete_tree(2, 3));
  CHECK(c.per_level == std::vector<long>{0, 0, 0});
  CHECK(c.total == 0);

  auto p = incomplete_counts(path_tree(2, 3));
  CHECK(p.per_level == std::vector<long>{1, 1, 1});
  CHECK(p.total == 3);

  // height-0 tree: no levels are counted
  CHECK(incomplete_counts(complete_tree(2, 0)).total == 0);
}

TEST_CASE("tree validation rejects malformed input") {
  // vertex with two parents
  CHECK_THROWS_AS(FiniteTree(2, {{{0, 0}}}), std::invalid_argument);
  // too many children
  CHECK_THROWS_AS(FiniteTree(2, {{{0, 1, 2}}}), std::invalid_argument);
  // orphaned vertex at level 1: root claims only child 0 of a 2-vertex level
  CHECK_THROWS_AS(FiniteTree(2, {{{0}}, {{0}, {1}}}), std::invalid_argument);
}

TEST_CASE("shape ids and canonical signatures") {
  FiniteTree t = complete_tree(2, 2);
  const auto &ids = t.shape_ids();
  CHECK(ids[1][0] == ids[1][1]); // both level-1 subtrees complete of height 1

  // basilica-at-(-1) shape: root -> 1 child -> 2 children
  FiniteTree s(2, {{{0}}, {{0, 1}}});
  FiniteTree s2(2, {{{0}}, {{1, 0}}}); // same shape, different child order
  CHECK(s.isomorphic_to(s2));
  CHECK_FALSE(s.isomorphic_to(path_tree(2, 2)));
}

TEST_CASE("json round trip is bit exact") {
  for (const FiniteTree &t : {complete_tree(2, 3), complete_tree(3, 2), path_tree(2, 4),
                              FiniteTree(2, {{{0}}, {{0, 1}}})}) {
    auto j = t.to_json();
    FiniteTree back = FiniteTree::from_json(j);
    CHECK(back == t);
    CHECK(back.to_json().dump() == j.dump());
  }
}

TEST_CASE("dot output limited to small trees") {
  CHECK(complete_tree(2, 2).to_dot().find("digraph") == 0);
  CHECK_THROWS_AS(complete_tree(2, 10).to_dot(200), std::invalid_argument);
}
