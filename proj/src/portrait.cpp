#include "arbordim/portrait.hpp"

#include <algorithm>
#include <stdexcept>

namespace arbordim {

TreePortrait::TreePortrait(std::shared_ptr<const FiniteTree> tree, Perms perms)
    : tree_(std::move(tree)), perms_(std::move(perms)) {
  if (!tree_)
    throw std::invalid_argument("TreePortrait: null tree");
  if (static_cast<int>(perms_.size()) != tree_->height())
    throw std::invalid_argument("TreePortrait: perm level count must equal height");
  for (int k = 0; k < tree_->height(); ++k)
    if (static_cast<int>(perms_[k].size()) != tree_->level_size(k))
      throw std::invalid_argument("TreePortrait: perm count mismatch at level " + std::to_string(k));
  check_legal();
}

TreePortrait TreePortrait::identity(std::shared_ptr<const FiniteTree> tree) {
  Perms perms(tree->height());
  for (int k = 0; k < tree->height(); ++k) {
    perms[k].resize(tree->level_size(k));
    for (int i = 0; i < tree->level_size(k); ++i) {
      int c = static_cast<int>(tree->children(k, i).size());
      perms[k][i].resize(c);
      for (int j = 0; j < c; ++j)
        perms[k][i][j] = j;
    }
  }
  return TreePortrait(std::move(tree), std::move(perms));
}

void TreePortrait::check_legal() const {
  const auto &shapes = tree_->shape_ids();
  for (int k = 0; k < tree_->height(); ++k) {
    for (int i = 0; i < tree_->level_size(k); ++i) {
      const auto &ch = tree_->children(k, i);
      const auto &p = perms_[k][i];
      if (p.size() != ch.size())
        throw std::invalid_argument("TreePortrait: perm size mismatch");
      std::vector<char> hit(p.size(), 0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] < 0 || p[j] >= static_cast<int>(p.size()) || hit[p[j]])
          throw std::invalid_argument("TreePortrait: not a permutation");
        hit[p[j]] = 1;
        if (shapes[k + 1][ch[j]] != shapes[k + 1][ch[p[j]]])
          throw std::invalid_argument("TreePortrait: permutation mixes children of different subtree shape");
      }
    }
  }
}

const std::vector<std::vector<int>> &TreePortrait::vertex_map() const {
  if (!vmap_.empty())
    return vmap_;
  const FiniteTree &t = *tree_;
  vmap_.resize(t.height() + 1);
  vmap_[0] = {0};
  for (int k = 0; k < t.height(); ++k) {
    vmap_[k + 1].assign(t.level_size(k + 1), -1);
    for (int i = 0; i < t.level_size(k); ++i) {
      const auto &ch = t.children(k, i);
      const auto &img_ch = t.children(k, vmap_[k][i]);
      for (std::size_t j = 0; j < ch.size(); ++j)
        vmap_[k + 1][ch[j]] = img_ch[perms_[k][i][j]];
    }
  }
  return vmap_;
}

VertexRef TreePortrait::apply(VertexRef v) const { return {v.level, vertex_map()[v.level][v.index]}; }

TreePortrait TreePortrait::inverse() const {
  const auto &vm = vertex_map();
  Perms inv(perms_.size());
  const FiniteTree &t = *tree_;
  for (int k = 0; k < t.height(); ++k) {
    inv[k].resize(t.level_size(k));
    for (int i = 0; i < t.level_size(k); ++i) {
      // the inverse portrait at sigma(v) undoes the perm at v
      int w = vm[k][i];
      const auto &p = perms_[k][i];
      inv[k][w].resize(p.size());
      for (std::size_t j = 0; j < p.size(); ++j)
        inv[k][w][p[j]] = static_cast<int>(j);
    }
  }
  return TreePortrait(tree_, std::move(inv));
}

TreePortrait TreePortrait::restrict_to(int n) const {
  if (n < 0 || n > tree_->height())
    throw std::invalid_argument("restrict: level out of range");
  auto sub = std::make_shared<FiniteTree>(tree_->truncate(n));
  Perms perms(perms_.begin(), perms_.begin() + n);
  return TreePortrait(std::move(sub), std::move(perms));
}

bool TreePortrait::is_identity() const {
  for (const auto &lv : perms_)
    for (const auto &p : lv)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (p[j] != static_cast<int>(j))
          return false;
  return true;
}

std::vector<int> TreePortrait::key() const {
  std::vector<int> out;
  for (const auto &lv : perms_)
    for (const auto &p : lv)
      out.insert(out.end(), p.begin(), p.end());
  return out;
}

TreePortrait compose(const TreePortrait &a, const TreePortrait &b) {
  if (!(a.tree() == b.tree()))
    throw std::invalid_argument("compose: portraits live on different trees");
  const FiniteTree &t = a.tree();
  const auto &bmap = b.vertex_map();
  TreePortrait::Perms perms(t.height());
  for (int k = 0; k < t.height(); ++k) {
    perms[k].resize(t.level_size(k));
    for (int i = 0; i < t.level_size(k); ++i) {
      const auto &pb = b.perms()[k][i];
      const auto &pa = a.perms()[k][bmap[k][i]];
      perms[k][i].resize(pb.size());
      for (std::size_t j = 0; j < pb.size(); ++j)
        perms[k][i][j] = pa[pb[j]];
    }
  }
  return TreePortrait(a.tree_ptr(), std::move(perms));
}

bool operator==(const TreePortrait &a, const TreePortrait &b) {
  return a.tree() == b.tree() && a.perms_ == b.perms_;
}

nlohmann::json TreePortrait::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto &lv : perms_) {
    nlohmann::json jl = nlohmann::json::array();
    for (const auto &p : lv)
      jl.push_back(p);
    j.push_back(jl);
  }
  return j;
}

TreePortrait TreePortrait::from_json(std::shared_ptr<const FiniteTree> tree, const nlohmann::json &j) {
  Perms perms;
  for (const auto &lv : j) {
    perms.emplace_back();
    for (const auto &p : lv)
      perms.back().push_back(p.get<std::vector<int>>());
  }
  return TreePortrait(std::move(tree), std::move(perms));
}

TreePortrait restrict_portrait(const TreePortrait &p, int n) { return p.restrict_to(n); }

} // namespace arbordim
