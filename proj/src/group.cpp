#include "arbordim/group.hpp"

#include "arbordim/errors.hpp"
#include "arbordim/rational_io.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace arbordim {

mpz_class aut_order_formula(int d, int n) {
  if (d < 2 || n < 0)
    throw std::invalid_argument("aut_order_formula: need d >= 2 and n >= 0");
  mpz_class e = (pow_mpz(d, n) - 1) / (d - 1);
  mpz_class fact = factorial(static_cast<unsigned>(d));
  // bit-size guard: d!^e has about e*log2(d!) bits
  mpz_class bits = e * static_cast<unsigned long>(mpz_sizeinbase(fact.get_mpz_t(), 2));
  if (bits > 64 * 1024 * 1024)
    throw resource_limit_error("aut_order_formula: result would exceed 64 Mbit");
  return pow_mpz(fact, e.get_ui());
}

namespace {

// Number of child permutations of (k,i) preserving subtree shapes:
// the product of m! over shape-class multiplicities m.
mpz_class legal_perm_count(const FiniteTree &t, int k, int i) {
  const auto &shapes = t.shape_ids();
  std::map<int, unsigned> mult;
  for (int c : t.children(k, i))
    ++mult[shapes[k + 1][c]];
  mpz_class n = 1;
  for (auto &[_, m] : mult)
    n *= factorial(m);
  return n;
}

std::vector<std::vector<int>> legal_perms(const FiniteTree &t, int k, int i) {
  const auto &shapes = t.shape_ids();
  const auto &ch = t.children(k, i);
  std::vector<int> sig(ch.size());
  for (std::size_t j = 0; j < ch.size(); ++j)
    sig[j] = shapes[k + 1][ch[j]];
  std::vector<int> p(ch.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t j = 0; j < p.size() && ok; ++j)
      ok = sig[p[j]] == sig[j];
    if (ok)
      out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct KeyHash {
  std::size_t operator()(const std::vector<int> &v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

mpz_class aut_order_of_tree(const FiniteTree &t) {
  mpz_class n = 1;
  for (int k = 0; k < t.height(); ++k)
    for (int i = 0; i < t.level_size(k); ++i)
      n *= legal_perm_count(t, k, i);
  return n;
}

PortraitGroup PortraitGroup::trivial(std::shared_ptr<const FiniteTree> tree) {
  std::vector<TreePortrait> e;
  e.push_back(TreePortrait::identity(tree));
  return PortraitGroup(std::move(tree), std::move(e));
}

PortraitGroup PortraitGroup::from_elements(std::shared_ptr<const FiniteTree> tree,
                                           std::vector<TreePortrait> elems) {
  std::sort(elems.begin(), elems.end(), [](const TreePortrait &a, const TreePortrait &b) {
    return a.key() < b.key();
  });
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const TreePortrait &a, const TreePortrait &b) { return a.key() == b.key(); }),
              elems.end());
  auto id_it = std::find_if(elems.begin(), elems.end(), [](const TreePortrait &p) { return p.is_identity(); });
  if (id_it == elems.end())
    throw std::invalid_argument("PortraitGroup: identity missing");
  std::rotate(elems.begin(), id_it, id_it + 1);
  return PortraitGroup(std::move(tree), std::move(elems));
}

std::optional<std::size_t> PortraitGroup::index_of(const TreePortrait &p) const {
  auto key = p.key();
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].key() == key)
      return i;
  return std::nullopt;
}

bool PortraitGroup::is_abelian() const {
  for (std::size_t i = 1; i < elems_.size(); ++i)
    for (std::size_t j = i + 1; j < elems_.size(); ++j)
      if (!(compose(elems_[i], elems_[j]) == compose(elems_[j], elems_[i])))
        return false;
  return true;
}

const std::vector<std::vector<std::uint16_t>> &PortraitGroup::cayley() const {
  if (!cayley_.empty())
    return cayley_;
  if (elems_.size() > 65535)
    throw resource_limit_error("cayley: group too large for a multiplication table");
  std::unordered_map<std::vector<int>, std::uint16_t, KeyHash> idx;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    idx[elems_[i].key()] = static_cast<std::uint16_t>(i);
  cayley_.assign(elems_.size(), std::vector<std::uint16_t>(elems_.size()));
  inv_.assign(elems_.size(), 0);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      auto it = idx.find(compose(elems_[i], elems_[j]).key());
      if (it == idx.end())
        throw std::invalid_argument("cayley: element set is not closed under composition");
      cayley_[i][j] = it->second;
      if (it->second == 0)
        inv_[j] = static_cast<std::uint16_t>(i);
    }
  return cayley_;
}

const std::vector<std::uint16_t> &PortraitGroup::inverses() const {
  cayley();
  return inv_;
}

PortraitGroup PortraitGroup::restrict_to(int n) const {
  auto sub = std::make_shared<FiniteTree>(tree_->truncate(n));
  std::vector<TreePortrait> out;
  out.reserve(elems_.size());
  for (const auto &e : elems_) {
    auto r = e.restrict_to(n);
    out.push_back(TreePortrait(sub, r.perms()));
  }
  return from_elements(sub, std::move(out));
}

std::vector<std::vector<int>> PortraitGroup::orbits(int level) const {
  int n = tree_->level_size(level);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &e : elems_) {
    const auto &vm = e.vertex_map()[level];
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(vm[i]);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i)
    groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto &[_, v] : groups)
    out.push_back(std::move(v));
  return out;
}

PortraitGroup enumerate_aut(std::shared_ptr<const FiniteTree> tree, std::size_t cap) {
  mpz_class order = aut_order_of_tree(*tree);
  if (order > static_cast<unsigned long>(cap))
    throw resource_limit_error("enumerate_aut: |Aut(T)| = " + order.get_str() +
                               " exceeds cap " + std::to_string(cap));
  const FiniteTree &t = *tree;
  // per-vertex lists of legal child permutations, in (level, index) order
  std::vector<std::vector<std::vector<int>>> choices;
  std::vector<std::pair<int, int>> slots;
  for (int k = 0; k < t.height(); ++k)
    for (int i = 0; i < t.level_size(k); ++i) {
      choices.push_back(legal_perms(t, k, i));
      slots.emplace_back(k, i);
    }
  std::vector<std::size_t> pick(choices.size(), 0);
  std::vector<TreePortrait> elems;
  for (;;) {
    TreePortrait::Perms perms(t.height());
    for (int k = 0; k < t.height(); ++k)
      perms[k].resize(t.level_size(k));
    for (std::size_t s = 0; s < slots.size(); ++s)
      perms[slots[s].first][slots[s].second] = choices[s][pick[s]];
    elems.push_back(TreePortrait(tree, std::move(perms)));
    // odometer
    std::size_t s = 0;
    while (s < pick.size()) {
      if (++pick[s] < choices[s].size())
        break;
      pick[s] = 0;
      ++s;
    }
    if (s == pick.size())
      break;
  }
  return PortraitGroup::from_elements(tree, std::move(elems));
}

PortraitGroup closure(std::shared_ptr<const FiniteTree> tree,
                      const std::vector<TreePortrait> &gens, std::size_t cap) {
  if (cap == 0)
    throw std::invalid_argument("closure: cap must be positive");
  for (const auto &g : gens)
    if (!(g.tree() == *tree))
      throw std::invalid_argument("closure: generator lives on a different tree");
  std::unordered_map<std::vector<int>, std::size_t, KeyHash> seen;
  std::vector<TreePortrait> elems;
  auto push = [&](TreePortrait p) -> bool {
    auto key = p.key();
    if (seen.count(key))
      return false;
    seen.emplace(std::move(key), elems.size());
    elems.push_back(std::move(p));
    if (elems.size() > cap)
      throw resource_limit_error("closure: generated more than " + std::to_string(cap) + " elements");
    return true;
  };
  push(TreePortrait::identity(tree));
  std::size_t next = 0;
  while (next < elems.size()) {
    TreePortrait cur = elems[next++];
    for (const auto &g : gens)
      push(compose(cur, g));
  }
  return PortraitGroup::from_elements(tree, std::move(elems));
}

FiniteTree quotient_tree(const FiniteTree &t, const PortraitGroup &g) {
  if (!(g.tree() == t))
    throw std::invalid_argument("quotient_tree: group does not act on this tree");
  // orbit index per vertex, per level; orbits ordered by minimum member
  std::vector<std::vector<int>> orbit_of(t.height() + 1);
  std::vector<int> orbit_count(t.height() + 1, 0);
  std::vector<std::vector<int>> orbit_min(t.height() + 1);
  for (int k = 0; k <= t.height(); ++k) {
    auto parts = g.orbits(k);
    orbit_of[k].assign(t.level_size(k), -1);
    for (std::size_t oi = 0; oi < parts.size(); ++oi)
      for (int v : parts[oi])
        orbit_of[k][v] = static_cast<int>(oi);
    orbit_count[k] = static_cast<int>(parts.size());
  }
  std::vector<std::vector<std::vector<int>>> ch(t.height());
  for (int k = 0; k < t.height(); ++k) {
    ch[k].assign(orbit_count[k], {});
    std::vector<char> placed(orbit_count[k + 1], 0);
    for (int i = 0; i < t.level_size(k); ++i)
      for (int c : t.children(k, i)) {
        int co = orbit_of[k + 1][c];
        if (!placed[co]) {
          placed[co] = 1;
          ch[k][orbit_of[k][i]].push_back(co);
        }
      }
    for (auto &v : ch[k])
      std::sort(v.begin(), v.end());
  }
  return FiniteTree(t.arity(), std::move(ch));
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void bit_set(Bits &b, std::size_t i) { b[i / 64] |= 1ull << (i % 64); }
bool bit_get(const Bits &b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
bool bits_subset(const Bits &a, const Bits &b) { // a subset of b
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w])
      return false;
  return true;
}

struct BitsHash {
  std::size_t operator()(const Bits &b) const {
    std::size_t h = 14695981039346656037ull;
    for (auto w : b) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<std::uint16_t> bits_to_list(const Bits &b, std::size_t n) {
  std::vector<std::uint16_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (bit_get(b, i))
      out.push_back(static_cast<std::uint16_t>(i));
  return out;
}

} // namespace

std::vector<Subgroup> enumerate_abelian_subgroups(const PortraitGroup &g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw resource_limit_error("enumerate_abelian_subgroups: |G| = " + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
  const auto &mul = g.cayley();
  // commuting bitset per element: cent[a] = { b : ab == ba }
  std::vector<Bits> cent(n, make_bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul[a][b] == mul[b][a])
        bit_set(cent[a], b);

  auto closure_with = [&](const Bits &h, std::uint16_t gen) {
    Bits out = h;
    // h is an abelian subgroup and gen centralizes it, so <h, gen> = h * <gen>
    std::vector<std::uint16_t> powers;
    std::uint16_t p = gen;
    while (p != 0) {
      powers.push_back(p);
      p = mul[p][gen];
    }
    for (std::size_t e = 0; e < n; ++e)
      if (bit_get(h, e))
        for (auto pw : powers)
          bit_set(out, mul[e][pw]);
    return out;
  };

  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Bits> stack;
  Bits triv = make_bits(n);
  bit_set(triv, 0);
  seen.insert(triv);
  stack.push_back(triv);
  std::vector<Subgroup> out;
  while (!stack.empty()) {
    Bits h = std::move(stack.back());
    stack.pop_back();
    out.push_back({bits_to_list(h, n), true});
    for (std::uint16_t e = 1; e < n; ++e) {
      if (bit_get(h, e))
        continue;
      if (!bits_subset(h, cent[e])) // centralizer pruning
        continue;
      Bits h2 = closure_with(h, e);
      if (seen.insert(h2).second)
        stack.push_back(h2);
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    return a.elems.size() != b.elems.size() ? a.elems.size() < b.elems.size() : a.elems < b.elems;
  });
  return out;
}

std::vector<Subgroup> all_subgroups_by_subsets(const PortraitGroup &g) {
  const std::size_t n = g.order();
  if (n > 16)
    throw resource_limit_error("all_subgroups_by_subsets: group too large for subset sweep");
  const auto &mul = g.cayley();
  std::vector<Subgroup> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1))
      continue; // must contain the identity
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1))
        continue;
      for (std::size_t b = 0; b < n && closed; ++b) {
        if (!(mask >> b & 1))
          continue;
        if (!(mask >> mul[a][b] & 1))
          closed = false;
      }
    }
    if (!closed)
      continue;
    Subgroup s;
    s.abelian = true;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1) {
        s.elems.push_back(static_cast<std::uint16_t>(a));
        for (std::size_t b = a; b < n; ++b)
          if ((mask >> b & 1) && mul[a][b] != mul[b][a])
            s.abelian = false;
      }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subgroup> abelian_subgroups_by_subsets(const PortraitGroup &g) {
  auto subs = all_subgroups_by_subsets(g);
  std::vector<Subgroup> out;
  for (auto &s : subs)
    if (s.abelian)
      out.push_back(std::move(s));
  return out;
}

// ---------------------------------------------------------------------------
// symmetric group machinery for largest_abelian_order

namespace {

using Perm = std::array<std::uint8_t, 8>;

struct SymGroup {
  int d;
  std::vector<Perm> elems;
  std::unordered_map<std::uint32_t, int> index;

  static std::uint32_t pack(const Perm &p, int d) {
    std::uint32_t k = 0;
    for (int i = 0; i < d; ++i)
      k = k * 8 + p[i];
    return k;
  }

  explicit SymGroup(int d) : d(d) {
    Perm p{};
    for (int i = 0; i < d; ++i)
      p[i] = static_cast<std::uint8_t>(i);
    std::vector<std::uint8_t> v(p.begin(), p.begin() + d);
    do {
      Perm q{};
      std::copy(v.begin(), v.end(), q.begin());
      index[pack(q, d)] = static_cast<int>(elems.size());
      elems.push_back(q);
    } while (std::next_permutation(v.begin(), v.end()));
  }

  Perm mul(const Perm &a, const Perm &b) const { // apply a then b
    Perm c{};
    for (int i = 0; i < d; ++i)
      c[i] = b[a[i]];
    return c;
  }
  Perm inv(const Perm &a) const {
    Perm c{};
    for (int i = 0; i < d; ++i)
      c[a[i]] = static_cast<std::uint8_t>(i);
    return c;
  }
  bool commutes(int i, int j) const { return mul(elems[i], elems[j]) == mul(elems[j], elems[i]); }
  int conj(int x, int s) const { // s^-1 x s
    return index.at(pack(mul(mul(inv(elems[s]), elems[x]), elems[s]), d));
  }
  std::vector<int> cycle_type(int x) const {
    std::vector<char> seen(d, 0);
    std::vector<int> type;
    for (int i = 0; i < d; ++i) {
      if (seen[i])
        continue;
      int len = 0, j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = elems[x][j];
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<int> &v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Exhaustive search for the largest abelian subgroup order: every maximal
// abelian subgroup M satisfies M = C(M), contains the center of any
// centralizer C(A) with A subset of M, and contains a conjugate of each
// non-central element class; the descent below visits a conjugate of every
// maximal abelian subgroup.
struct AbelianDescent {
  const SymGroup &sg;
  long best = 1;
  std::unordered_set<std::vector<int>, VecHash> memo;

  explicit AbelianDescent(const SymGroup &sg) : sg(sg) {}

  void visit(std::vector<int> S) {
    if (static_cast<long>(S.size()) <= best)
      return;
    if (!memo.insert(S).second)
      return;
    // center of S
    std::vector<int> Z;
    std::vector<char> central(S.size(), 1);
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = 0; j < S.size(); ++j)
        if (!sg.commutes(S[i], S[j])) {
          central[i] = 0;
          break;
        }
      if (central[i])
        Z.push_back(S[i]);
    }
    if (Z.size() == S.size()) {
      best = std::max(best, static_cast<long>(S.size()));
      return;
    }
    // orbit representatives of S acting on S \ Z by conjugation
    std::unordered_set<int> in_S(S.begin(), S.end());
    std::unordered_set<int> done;
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (central[i] || done.count(S[i]))
        continue;
      int rep = S[i];
      for (int s : S)
        done.insert(sg.conj(rep, s));
      std::vector<int> S2;
      for (int s : S)
        if (sg.commutes(s, rep))
          S2.push_back(s);
      visit(std::move(S2));
    }
  }
};

} // namespace

long largest_abelian_order(int d) {
  if (d < 2 || d > 8)
    throw std::invalid_argument("largest_abelian_order: supported range is 2 <= d <= 8");
  SymGroup sg(d);
  AbelianDescent search(sg);
  // seed with one representative per non-identity conjugacy class
  std::map<std::vector<int>, int> reps;
  for (int x = 1; x < static_cast<int>(sg.elems.size()); ++x)
    reps.try_emplace(sg.cycle_type(x), x);
  for (auto &[_, r] : reps) {
    std::vector<int> C;
    for (int s = 0; s < static_cast<int>(sg.elems.size()); ++s)
      if (sg.commutes(s, r))
        C.push_back(s);
    search.visit(std::move(C));
  }
  return search.best;
}

std::pair<long, long> abelian_subgroups_of_symmetric(int d) {
  if (d < 2 || d > 6)
    throw std::invalid_argument("abelian_subgroups_of_symmetric: supported range is 2 <= d <= 6");
  SymGroup sg(d);
  const std::size_t n = sg.elems.size();
  std::vector<std::vector<std::uint16_t>> mul(n, std::vector<std::uint16_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a][b] = static_cast<std::uint16_t>(sg.index.at(SymGroup::pack(sg.mul(sg.elems[a], sg.elems[b]), d)));

  std::vector<Bits> cent(n, make_bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul[a][b] == mul[b][a])
        bit_set(cent[a], b);

  auto closure_with = [&](const Bits &h, std::uint16_t gen) {
    Bits out = h;
    std::vector<std::uint16_t> powers;
    std::uint16_t p = gen;
    while (p != 0) {
      powers.push_back(p);
      p = mul[p][gen];
    }
    for (std::size_t e = 0; e < n; ++e)
      if (bit_get(h, e))
        for (auto pw : powers)
          bit_set(out, mul[e][pw]);
    return out;
  };

  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Bits> stack;
  Bits triv = make_bits(n);
  bit_set(triv, 0);
  seen.insert(triv);
  stack.push_back(triv);
  long count = 0, maxorder = 1;
  while (!stack.empty()) {
    Bits h = std::move(stack.back());
    stack.pop_back();
    ++count;
    long sz = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (bit_get(h, i))
        ++sz;
    maxorder = std::max(maxorder, sz);
    for (std::uint16_t e = 1; e < n; ++e) {
      if (bit_get(h, e) || !bits_subset(h, cent[e]))
        continue;
      Bits h2 = closure_with(h, e);
      if (seen.insert(h2).second)
        stack.push_back(h2);
    }
  }
  return {maxorder, count};
}

AbelianBoundReport verify_abelian_bound(const FiniteTree &t, const PortraitGroup &g) {
  if (!(g.tree() == t))
    throw std::invalid_argument("verify_abelian_bound: group does not act on this tree");
  if (!g.is_abelian())
    throw std::invalid_argument("verify_abelian_bound: group is not abelian");
  AbelianBoundReport r;
  r.order = static_cast<unsigned long>(g.order());
  r.abelian = true;
  FiniteTree q = quotient_tree(t, g);
  r.incomplete_quotient = q.incomplete_counts().total;
  r.q = largest_abelian_order(t.arity());
  r.bound = pow_mpz(r.q, static_cast<unsigned long>(r.incomplete_quotient));
  r.holds = r.order <= r.bound;
  return r;
}

nlohmann::json AbelianBoundReport::to_json() const {
  return {{"order", order.get_str()},
          {"abelian", abelian},
          {"I_quotient", incomplete_quotient},
          {"q", q},
          {"bound_holds", holds}};
}

CompleteEmbedding embed_complete(const FiniteTree &t) {
  CompleteEmbedding emb{FiniteTree::complete(t.arity(), t.height()), {}};
  const int d = t.arity();
  emb.vertex_map.resize(t.height() + 1);
  emb.vertex_map[0] = {0};
  for (int k = 0; k < t.height(); ++k) {
    emb.vertex_map[k + 1].assign(t.level_size(k + 1), -1);
    for (int i = 0; i < t.level_size(k); ++i) {
      int img = emb.vertex_map[k][i];
      const auto &ch = t.children(k, i);
      const auto &cch = emb.complete.children(k, img);
      for (std::size_t j = 0; j < ch.size(); ++j)
        emb.vertex_map[k + 1][ch[j]] = cch[j];
    }
    (void)d;
  }
  return emb;
}

TreePortrait extend_portrait(const TreePortrait &p, const CompleteEmbedding &emb,
                             std::shared_ptr<const FiniteTree> complete_tree) {
  if (!(*complete_tree == emb.complete))
    throw std::invalid_argument("extend_portrait: tree does not match the embedding");
  const FiniteTree &t = p.tree();
  const int d = t.arity();
  TreePortrait ext = TreePortrait::identity(complete_tree);
  TreePortrait::Perms perms = ext.perms();
  for (int k = 0; k < t.height(); ++k)
    for (int i = 0; i < t.level_size(k); ++i) {
      int img_v = emb.vertex_map[k][i];
      const auto &orig = p.perms()[k][i];
      std::vector<int> q(d);
      for (int j = 0; j < d; ++j)
        q[j] = j;
      for (std::size_t j = 0; j < orig.size(); ++j)
        q[j] = orig[j];
      perms[k][img_v] = q;
    }
  return TreePortrait(complete_tree, std::move(perms));
}

} // namespace arbordim
