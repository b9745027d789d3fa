#include "doctest.h"

#include "arbordim/errors.hpp"
#include "arbordim/group.hpp"

#include <memory>

using namespace arbordim;

namespace {

std::shared_ptr<const FiniteTree> shared_complete(int d, int n) {
  return std::make_shared<FiniteTree>(complete_tree(d, n));
}

// swap of the two children of the root on a binary tree, identity elsewhere
TreePortrait root_swap(const std::shared_ptr<const FiniteTree> &t) {
  TreePortrait p = TreePortrait::identity(t);
  auto perms = p.perms();
  perms[0][0] = {1, 0};
  return TreePortrait(t, perms);
}

PortraitGroup subgroup_as_group(const PortraitGroup &g, const Subgroup &s) {
  std::vector<TreePortrait> elems;
  for (auto i : s.elems)
    elems.push_back(g.element(i));
  return PortraitGroup::from_elements(g.tree_ptr(), std::move(elems));
}

} // namespace

TEST_CASE("aut order formula") {
  CHECK(aut_order_formula(2, 1) == 2);
  CHECK(aut_order_formula(2, 3) == 128);
  CHECK(aut_order_formula(3, 2) == 1296);
  CHECK(aut_order_formula(2, 0) == 1);
}

TEST_CASE("compose, inverse, restrict") {
  auto t = shared_complete(2, 1);
  TreePortrait id = TreePortrait::identity(t);
  TreePortrait s = root_swap(t);
  CHECK(compose(id, s) == s);
  CHECK(compose(s, s.inverse()) == id);
  CHECK(compose(s, s) == id); // involution

  auto t2 = shared_complete(2, 2);
  TreePortrait sigma = TreePortrait::identity(t2);
  auto perms = sigma.perms();
  perms[1][0] = {1, 0}; // swap two level-2 siblings only
  sigma = TreePortrait(t2, perms);
  CHECK(sigma.restrict_to(1).is_identity());
  CHECK(sigma.restrict_to(2) == sigma);
  CHECK(sigma.restrict_to(0).is_identity());
}

TEST_CASE("portrait legality") {
  // swapping children of different subtree shape is rejected
  auto t = std::make_shared<FiniteTree>(FiniteTree(2, {{{0, 1}}, {{0}, {1, 2}}}));
  TreePortrait id = TreePortrait::identity(t);
  auto perms = id.perms();
  perms[0][0] = {1, 0};
  CHECK_THROWS_AS(TreePortrait(t, perms), std::invalid_argument);
}

TEST_CASE("enumerate_aut orders") {
  CHECK(enumerate_aut(shared_complete(2, 2)).order() == 8);
  // path tree of height 2: no sibling pairs
  auto path = std::make_shared<FiniteTree>(FiniteTree(2, {{{0}}, {{0}}}));
  CHECK(enumerate_aut(path).order() == 1);
  // preimage-tree shape of x^2-1 at -1, depth 2: one sibling swap at level 2
  auto shape = std::make_shared<FiniteTree>(FiniteTree(2, {{{0}}, {{0, 1}}}));
  CHECK(enumerate_aut(shape).order() == 2);
}

TEST_CASE("enumerate_aut matches the closed formula on complete trees") {
  for (auto [d, n] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    auto g = enumerate_aut(shared_complete(d, n));
    CHECK(mpz_class(static_cast<unsigned long>(g.order())) == aut_order_formula(d, n));
  }
}

TEST_CASE("enumerate_aut cap") {
  CHECK_THROWS_AS(enumerate_aut(shared_complete(2, 5), 1000), resource_limit_error);
}

TEST_CASE("closure") {
  auto t = shared_complete(2, 1);
  CHECK(closure(t, {}).order() == 1);
  CHECK(closure(t, {root_swap(t)}).order() == 2);

  // level-1 swap and one level-2 swap generate the full dihedral Aut(T_2^com)
  auto t2 = shared_complete(2, 2);
  TreePortrait a = root_swap(t2);
  TreePortrait b = TreePortrait::identity(t2);
  auto perms = b.perms();
  perms[1][0] = {1, 0};
  b = TreePortrait(t2, perms);
  PortraitGroup gen = closure(t2, {a, b});
  PortraitGroup full = enumerate_aut(t2);
  CHECK(gen.order() == 8);
  REQUIRE(gen.order() == full.order());
  for (const auto &e : gen.elements())
    CHECK(full.index_of(e).has_value());

  CHECK_THROWS_AS(closure(t2, {a, b}, 4), resource_limit_error);
}

TEST_CASE("orbits") {
  auto t = shared_complete(2, 2);
  PortraitGroup triv = PortraitGroup::trivial(t);
  CHECK(triv.orbits(2).size() == 4);

  PortraitGroup full = enumerate_aut(t);
  CHECK(full.orbits(1).size() == 1);
  CHECK(full.orbits(2).size() == 1);

  TreePortrait b = TreePortrait::identity(t);
  auto perms = b.perms();
  perms[1][0] = {1, 0};
  b = TreePortrait(t, perms);
  PortraitGroup small = closure(t, {b});
  auto o = small.orbits(2);
  CHECK(o.size() == 3); // one 2-orbit plus singletons
}

TEST_CASE("quotient trees") {
  FiniteTree t2 = complete_tree(2, 2);
  auto t2p = std::make_shared<FiniteTree>(t2);

  FiniteTree q_triv = quotient_tree(t2, PortraitGroup::trivial(t2p));
  CHECK(q_triv.isomorphic_to(t2));
  CHECK(q_triv.incomplete_counts().total == t2.incomplete_counts().total);

  auto t1p = shared_complete(2, 1);
  FiniteTree q1 = quotient_tree(*t1p, closure(t1p, {root_swap(t1p)}));
  CHECK(q1.vertex_count() == 2);
  CHECK(q1.level_size(1) == 1);

  FiniteTree q2 = quotient_tree(t2, enumerate_aut(t2p));
  CHECK(q2.vertex_count() == 3); // full group is level-transitive: a path

  // mismatched tree/group rejected
  CHECK_THROWS_AS(quotient_tree(complete_tree(2, 3), PortraitGroup::trivial(t2p)),
                  std::invalid_argument);
}

TEST_CASE("quotient size never exceeds the tree, equality iff trivial action") {
  auto t = shared_complete(2, 2);
  PortraitGroup full = enumerate_aut(t);
  auto subs = all_subgroups_by_subsets(full);
  for (const auto &s : subs) {
    PortraitGroup h = subgroup_as_group(full, s);
    FiniteTree q = quotient_tree(*t, h);
    CHECK(q.vertex_count() <= t->vertex_count());
    CHECK((q.vertex_count() == t->vertex_count()) == (h.order() == 1));
  }
}

TEST_CASE("quotient commutes with truncation") {
  auto t = shared_complete(2, 3);
  PortraitGroup g = enumerate_aut(t);
  auto subs = enumerate_abelian_subgroups(g);
  int step = static_cast<int>(subs.size() / 17) + 1;
  for (std::size_t si = 0; si < subs.size(); si += step) {
    PortraitGroup h = subgroup_as_group(g, subs[si]);
    for (int k = 0; k <= 3; ++k) {
      FiniteTree a = quotient_tree(*t, h).truncate(k);
      FiniteTree b = quotient_tree(t->truncate(k), h.restrict_to(k));
      CHECK(a.isomorphic_to(b));
    }
  }
}

TEST_CASE("restriction is a homomorphism") {
  auto t = shared_complete(2, 3);
  PortraitGroup g = enumerate_aut(t);
  // sample pairs deterministically
  for (std::size_t i = 0; i < g.order(); i += 13)
    for (std::size_t j = 0; j < g.order(); j += 29)
      for (int n : {0, 1, 2}) {
        auto lhs = compose(g.element(i), g.element(j)).restrict_to(n);
        auto rhs = compose(g.element(i).restrict_to(n), g.element(j).restrict_to(n));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("restricted image order divides the complete-tree order") {
  // collapse tree: root with 2 children, one of them with 2 children, other with 1
  auto t = std::make_shared<FiniteTree>(FiniteTree(2, {{{0, 1}}, {{0, 1}, {2}}, {{0, 1}, {2}, {3}}}));
  PortraitGroup g = enumerate_aut(t);
  for (int n = 0; n <= 3; ++n) {
    PortraitGroup rn = g.restrict_to(n);
    mpz_class full = aut_order_formula(2, n);
    CHECK(mpz_divisible_p(full.get_mpz_t(),
                          mpz_class(static_cast<unsigned long>(rn.order())).get_mpz_t()));
  }
}

TEST_CASE("subgroup orders divide the group order, coset bound holds") {
  auto t = shared_complete(2, 2);
  PortraitGroup g = enumerate_aut(t);
  auto subs = all_subgroups_by_subsets(g);
  for (const auto &s : subs) {
    CHECK(g.order() % s.elems.size() == 0);
    PortraitGroup h = subgroup_as_group(g, s);
    for (int n : {0, 1, 2}) {
      std::size_t rg = g.restrict_to(n).order();
      std::size_t rh = h.restrict_to(n).order();
      // (G:H) >= (r_n(G):r_n(H))
      CHECK(g.order() / h.order() >= rg / rh);
      CHECK(rg % rh == 0);
    }
  }
}

TEST_CASE("embedding into the complete tree is a homomorphism") {
  FiniteTree t(2, {{{0, 1}}, {{0, 1}, {2}}, {{0, 1}, {2}, {3}}});
  auto tp = std::make_shared<FiniteTree>(t);
  CompleteEmbedding emb = embed_complete(t);
  auto cp = std::make_shared<FiniteTree>(emb.complete);
  PortraitGroup g = enumerate_aut(tp);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      TreePortrait lhs = extend_portrait(compose(g.element(i), g.element(j)), emb, cp);
      TreePortrait rhs = compose(extend_portrait(g.element(i), emb, cp),
                                 extend_portrait(g.element(j), emb, cp));
      CHECK(lhs == rhs);
    }
  // injectivity: extensions of distinct elements stay distinct
  std::vector<TreePortrait> ext;
  for (std::size_t i = 0; i < g.order(); ++i)
    ext.push_back(extend_portrait(g.element(i), emb, cp));
  PortraitGroup img = PortraitGroup::from_elements(cp, ext);
  CHECK(img.order() == g.order());
}

TEST_CASE("largest abelian order of S_d") {
  CHECK(largest_abelian_order(2) == 2);
  CHECK(largest_abelian_order(3) == 3);
  CHECK(largest_abelian_order(4) == 4);
  CHECK(largest_abelian_order(5) == 6);
  CHECK_THROWS_AS(largest_abelian_order(9), std::invalid_argument);
}

TEST_CASE("abelian order search agrees with plain enumeration") {
  for (int d = 2; d <= 6; ++d) {
    auto [maxo, count] = abelian_subgroups_of_symmetric(d);
    CHECK(maxo == largest_abelian_order(d));
    if (d == 3)
      CHECK(count == 5);
    if (d == 4)
      CHECK(count == 21);
    if (d == 5)
      CHECK(count == 87);
  }
}

TEST_CASE("abelian subgroup enumeration") {
  auto t1 = shared_complete(2, 1);
  PortraitGroup a1 = enumerate_aut(t1);
  CHECK(enumerate_abelian_subgroups(a1).size() == 2);
  CHECK(enumerate_abelian_subgroups(PortraitGroup::trivial(t1)).size() == 1);

  auto t2 = shared_complete(2, 2);
  PortraitGroup a2 = enumerate_aut(t2);
  auto fast = enumerate_abelian_subgroups(a2);
  auto brute = abelian_subgroups_by_subsets(a2);
  CHECK(fast.size() == brute.size());
  CHECK(fast.size() == 9);

  CHECK_THROWS_AS(enumerate_abelian_subgroups(a2, 4), resource_limit_error);
}

TEST_CASE("abelian bound verification") {
  auto t2 = shared_complete(2, 2);
  PortraitGroup triv = PortraitGroup::trivial(t2);
  auto r = verify_abelian_bound(*t2, triv);
  CHECK(r.incomplete_quotient == 0);
  CHECK(r.bound == 1);
  CHECK(r.holds);

  auto t1 = shared_complete(2, 1);
  auto r1 = verify_abelian_bound(*t1, closure(t1, {root_swap(t1)}));
  CHECK(r1.order == 2);
  CHECK(r1.incomplete_quotient == 1);
  CHECK(r1.q == 2);
  CHECK(r1.holds);

  PortraitGroup full2 = enumerate_aut(t2);
  CHECK_THROWS_AS(verify_abelian_bound(*t2, full2), std::invalid_argument);

  nlohmann::json j = r1.to_json();
  CHECK(j["order"] == "2");
  CHECK(j["bound_holds"] == true);
}

TEST_CASE("abelian sweep over Aut(T_3^com) holds the bound") {
  auto t3 = shared_complete(2, 3);
  PortraitGroup g = enumerate_aut(t3);
  auto subs = enumerate_abelian_subgroups(g);
  CHECK(subs.size() == 323);
  for (const auto &s : subs) {
    PortraitGroup h = subgroup_as_group(g, s);
    CHECK(verify_abelian_bound(*t3, h).holds);
  }
}
