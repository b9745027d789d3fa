#include "arbordim/tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace arbordim {

FiniteTree::FiniteTree(int arity_bound, std::vector<std::vector<std::vector<int>>> children)
    : d_(arity_bound), height_(static_cast<int>(children.size())) {
  if (d_ < 2)
    throw std::invalid_argument("FiniteTree: arity bound must be >= 2");
  levels_.resize(height_ + 1);
  levels_[0].resize(1);
  for (int k = 0; k < height_; ++k) {
    if (children[k].size() != levels_[k].size())
      throw std::invalid_argument("FiniteTree: child-list count mismatch at level " + std::to_string(k));
    std::size_t next_size = 0;
    for (const auto &ch : children[k])
      next_size += ch.size();
    levels_[k + 1].resize(next_size);
    for (std::size_t i = 0; i < children[k].size(); ++i) {
      levels_[k][i].children = children[k][i];
      for (int c : children[k][i]) {
        if (c < 0 || c >= static_cast<int>(next_size))
          throw std::invalid_argument("FiniteTree: child index out of range");
        levels_[k + 1][c].parent = static_cast<int>(i);
      }
    }
  }
  validate();
}

void FiniteTree::validate() const {
  for (int k = 0; k <= height_; ++k) {
    if (levels_[k].empty())
      throw std::invalid_argument("FiniteTree: empty level " + std::to_string(k));
    for (std::size_t i = 0; i < levels_[k].size(); ++i) {
      const Node &n = levels_[k][i];
      if (k == height_) {
        if (!n.children.empty())
          throw std::invalid_argument("FiniteTree: leaf level has children");
      } else {
        if (n.children.empty() || static_cast<int>(n.children.size()) > d_)
          throw std::invalid_argument("FiniteTree: vertex must have between 1 and d children");
      }
      if (k > 0 && n.parent < 0)
        throw std::invalid_argument("FiniteTree: non-root vertex without parent");
    }
  }
  // children lists partition the next level
  for (int k = 0; k < height_; ++k) {
    std::vector<char> seen(levels_[k + 1].size(), 0);
    for (const auto &node : levels_[k])
      for (int c : node.children) {
        if (seen[c])
          throw std::invalid_argument("FiniteTree: vertex with two parents");
        seen[c] = 1;
      }
    for (char s : seen)
      if (!s)
        throw std::invalid_argument("FiniteTree: orphaned vertex");
  }
}

FiniteTree FiniteTree::complete(int d, int n) {
  if (d < 2 || n < 0)
    throw std::invalid_argument("complete_tree: need d >= 2 and n >= 0");
  std::vector<std::vector<std::vector<int>>> ch(n);
  long width = 1;
  for (int k = 0; k < n; ++k) {
    ch[k].resize(width);
    for (long i = 0; i < width; ++i) {
      ch[k][i].resize(d);
      for (int j = 0; j < d; ++j)
        ch[k][i][j] = static_cast<int>(i * d + j);
    }
    width *= d;
  }
  return FiniteTree(d, std::move(ch));
}

FiniteTree FiniteTree::single_vertex(int d) { return complete(d, 0); }

long FiniteTree::vertex_count() const {
  long n = 0;
  for (const auto &lv : levels_)
    n += static_cast<long>(lv.size());
  return n;
}

FiniteTree FiniteTree::truncate(int n) const {
  if (n < 0 || n > height_)
    throw std::invalid_argument("truncate: level out of range");
  std::vector<std::vector<std::vector<int>>> ch(n);
  for (int k = 0; k < n; ++k) {
    ch[k].resize(levels_[k].size());
    for (std::size_t i = 0; i < levels_[k].size(); ++i)
      ch[k][i] = levels_[k][i].children;
  }
  return FiniteTree(d_, std::move(ch));
}

IncompleteCounts FiniteTree::incomplete_counts() const {
  IncompleteCounts out;
  out.per_level.resize(height_, 0);
  for (int k = 0; k < height_; ++k)
    for (const auto &node : levels_[k])
      if (static_cast<int>(node.children.size()) < d_)
        ++out.per_level[k];
  for (long v : out.per_level)
    out.total += v;
  return out;
}

bool FiniteTree::is_complete() const {
  for (int k = 0; k < height_; ++k)
    for (const auto &node : levels_[k])
      if (static_cast<int>(node.children.size()) != d_)
        return false;
  return true;
}

const std::vector<std::vector<int>> &FiniteTree::shape_ids() const {
  if (!shape_ids_.empty())
    return shape_ids_;
  shape_ids_.resize(height_ + 1);
  shape_ids_[height_].assign(levels_[height_].size(), 0);
  for (int k = height_ - 1; k >= 0; --k) {
    std::map<std::vector<int>, int> dedup;
    shape_ids_[k].resize(levels_[k].size());
    for (std::size_t i = 0; i < levels_[k].size(); ++i) {
      std::vector<int> sig;
      for (int c : levels_[k][i].children)
        sig.push_back(shape_ids_[k + 1][c]);
      std::sort(sig.begin(), sig.end());
      auto [it, _] = dedup.try_emplace(sig, static_cast<int>(dedup.size()));
      shape_ids_[k][i] = it->second;
    }
  }
  return shape_ids_;
}

namespace {
std::string canon(const FiniteTree &t, int level, int index) {
  std::vector<std::string> parts;
  for (int c : t.children(level, index))
    parts.push_back(canon(t, level + 1, c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto &p : parts)
    s += p;
  s += ")";
  return s;
}
} // namespace

std::string FiniteTree::canonical_signature() const { return canon(*this, 0, 0); }

bool FiniteTree::isomorphic_to(const FiniteTree &other) const {
  return d_ == other.d_ && height_ == other.height_ &&
         canonical_signature() == other.canonical_signature();
}

bool operator==(const FiniteTree &a, const FiniteTree &b) {
  if (a.d_ != b.d_ || a.height_ != b.height_)
    return false;
  for (int k = 0; k <= a.height_; ++k) {
    if (a.levels_[k].size() != b.levels_[k].size())
      return false;
    for (std::size_t i = 0; i < a.levels_[k].size(); ++i)
      if (a.levels_[k][i].children != b.levels_[k][i].children)
        return false;
  }
  return true;
}

nlohmann::json FiniteTree::to_json() const {
  nlohmann::json levels = nlohmann::json::array();
  for (int k = 0; k <= height_; ++k) {
    nlohmann::json lv = nlohmann::json::array();
    for (const auto &node : levels_[k])
      lv.push_back({{"children", node.children}});
    levels.push_back(lv);
  }
  return {{"d", d_}, {"height", height_}, {"levels", levels}};
}

FiniteTree FiniteTree::from_json(const nlohmann::json &j) {
  int d = j.at("d").get<int>();
  int height = j.at("height").get<int>();
  const auto &levels = j.at("levels");
  if (static_cast<int>(levels.size()) != height + 1)
    throw std::invalid_argument("FiniteTree JSON: level count mismatch");
  std::vector<std::vector<std::vector<int>>> ch(height);
  for (int k = 0; k < height; ++k) {
    for (const auto &v : levels[k])
      ch[k].push_back(v.at("children").get<std::vector<int>>());
  }
  FiniteTree t(d, std::move(ch));
  if (t.level_size(height) != static_cast<int>(levels[height].size()))
    throw std::invalid_argument("FiniteTree JSON: leaf level size mismatch");
  return t;
}

std::string FiniteTree::to_dot(int max_vertices) const {
  if (vertex_count() > max_vertices)
    throw std::invalid_argument("to_dot: tree exceeds " + std::to_string(max_vertices) + " vertices");
  std::ostringstream os;
  os << "digraph tree {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (int k = 0; k < height_; ++k)
    for (std::size_t i = 0; i < levels_[k].size(); ++i)
      for (int c : levels_[k][i].children)
        os << "  \"" << k << "_" << i << "\" -> \"" << k + 1 << "_" << c << "\";\n";
  os << "}\n";
  return os.str();
}

FiniteTree complete_tree(int d, int n) { return FiniteTree::complete(d, n); }
FiniteTree truncate(const FiniteTree &t, int n) { return t.truncate(n); }
IncompleteCounts incomplete_counts(const FiniteTree &t) { return t.incomplete_counts(); }

} // namespace arbordim
