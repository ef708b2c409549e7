#include "starforge/forest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "starforge/errors.hpp"

namespace starforge {

std::vector<std::string> SpectralForest::check(const std::vector<NodeSpec>& specs) {
  std::vector<std::string> problems;
  const int n = static_cast<int>(specs.size());
  if (n == 0) {
    problems.push_back("empty forest");
    return problems;
  }
  std::set<std::string> seen;
  for (int i = 0; i < n; ++i) {
    if (specs[i].name.empty()) problems.push_back("node " + std::to_string(i) + " has no name");
    if (!seen.insert(specs[i].name).second)
      problems.push_back("duplicate node name '" + specs[i].name + "'");
    if (specs[i].parent) {
      int p = *specs[i].parent;
      if (p < 0 || p >= n)
        problems.push_back("node '" + specs[i].name + "' has an orphan parent reference");
    }
  }
  // Cycle detection by walking parents.
  for (int i = 0; i < n; ++i) {
    int steps = 0;
    std::optional<PrimeId> cur = i;
    while (cur && specs[*cur].parent) {
      cur = specs[*cur].parent;
      if (*cur < 0 || *cur >= n) break;
      if (++steps > n) {
        problems.push_back("cycle through node '" + specs[i].name + "'");
        break;
      }
    }
  }
  std::vector<int> child_count(n, 0);
  for (int i = 0; i < n; ++i)
    if (specs[i].parent && *specs[i].parent >= 0 && *specs[i].parent < n)
      ++child_count[*specs[i].parent];
  for (int i = 0; i < n; ++i)
    if (specs[i].declared_maximal && child_count[i] > 0)
      problems.push_back("internal node marked maximal: '" + specs[i].name + "'");
  return problems;
}

ForestRef SpectralForest::create(std::vector<NodeSpec> specs) {
  auto problems = check(specs);
  if (!problems.empty()) {
    std::string msg = "invalid forest:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw input_error(msg);
  }
  auto f = std::make_shared<SpectralForest>();
  const int n = static_cast<int>(specs.size());
  f->nodes_.resize(n);
  f->children_.assign(n, {});
  f->depth_.assign(n, 0);
  f->root_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    f->nodes_[i] = Node{specs[i].name, specs[i].parent, specs[i].group};
    if (specs[i].parent) f->children_[*specs[i].parent].push_back(i);
  }
  // Depths and roots, walking up.
  for (int i = 0; i < n; ++i) {
    int d = 1;
    int cur = i;
    while (f->nodes_[cur].parent) {
      cur = *f->nodes_[cur].parent;
      ++d;
    }
    f->depth_[i] = d;
    f->root_[i] = cur;
  }
  for (int i = 0; i < n; ++i)
    if (f->children_[i].empty()) f->leaves_.push_back(i);
  f->paths_.resize(f->leaves_.size());
  f->branches_.resize(f->leaves_.size());
  for (size_t m = 0; m < f->leaves_.size(); ++m) {
    std::vector<PrimeId> path;
    int cur = f->leaves_[m];
    while (true) {
      path.push_back(cur);
      if (!f->nodes_[cur].parent) break;
      cur = *f->nodes_[cur].parent;
    }
    std::reverse(path.begin(), path.end());
    f->paths_[m] = path;
    std::vector<RankOneGroup> groups;
    groups.reserve(path.size());
    for (PrimeId p : path) groups.push_back(f->nodes_[p].group);
    f->branches_[m] = make_branch(std::move(groups));
  }
  return f;
}

std::optional<LeafId> SpectralForest::leaf_index(PrimeId p) const {
  for (size_t m = 0; m < leaves_.size(); ++m)
    if (leaves_[m] == p) return static_cast<LeafId>(m);
  return std::nullopt;
}

std::optional<PrimeId> SpectralForest::node_by_name(const std::string& name) const {
  for (int i = 0; i < node_count(); ++i)
    if (nodes_[i].name == name) return i;
  return std::nullopt;
}

std::vector<LeafId> SpectralForest::leaves_above(PrimeId p) const {
  std::vector<LeafId> out;
  for (int m = 0; m < leaf_count(); ++m)
    if (prime_on_path(p, m)) out.push_back(m);
  return out;
}

bool SpectralForest::prime_on_path(PrimeId p, LeafId m) const {
  const auto& pth = paths_[m];
  return depth_[p] <= static_cast<int>(pth.size()) && pth[depth_[p] - 1] == p;
}

int SpectralForest::shared_depth(LeafId a, LeafId b) const {
  const auto& pa = paths_[a];
  const auto& pb = paths_[b];
  int d = 0;
  for (size_t k = 0; k < std::min(pa.size(), pb.size()); ++k) {
    if (pa[k] == pb[k])
      d = static_cast<int>(k + 1);
    else
      break;
  }
  return d;
}

int SpectralForest::shared_depth_with_prime(PrimeId p, LeafId m) const {
  // Path of p: root..p.
  std::vector<PrimeId> pp;
  int cur = p;
  while (true) {
    pp.push_back(cur);
    if (!nodes_[cur].parent) break;
    cur = *nodes_[cur].parent;
  }
  std::reverse(pp.begin(), pp.end());
  const auto& pm = paths_[m];
  int d = 0;
  for (size_t k = 0; k < std::min(pp.size(), pm.size()); ++k) {
    if (pp[k] == pm[k])
      d = static_cast<int>(k + 1);
    else
      break;
  }
  return d;
}

int SpectralForest::max_depth() const {
  int d = 0;
  for (int i = 0; i < node_count(); ++i) d = std::max(d, depth_[i]);
  return d;
}

bool SpectralForest::all_discrete() const {
  for (int i = 0; i < node_count(); ++i)
    if (nodes_[i].group.dense()) return false;
  return true;
}

bool same_forest(const ForestRef& a, const ForestRef& b) {
  if (a == b) return true;
  if (!a || !b || a->node_count() != b->node_count()) return false;
  for (int i = 0; i < a->node_count(); ++i) {
    if (a->name(i) != b->name(i)) return false;
    if (a->parent(i) != b->parent(i)) return false;
    if (!(a->edge_group(i) == b->edge_group(i))) return false;
  }
  return true;
}

std::vector<std::vector<LeafId>> dependence_classes(const ForestRef& f) {
  std::map<PrimeId, std::vector<LeafId>> by_root;
  for (int m = 0; m < f->leaf_count(); ++m)
    by_root[f->root_of(f->leaf_prime(m))].push_back(m);
  std::vector<std::vector<LeafId>> out;
  for (auto& [root, leaves] : by_root) out.push_back(leaves);
  return out;
}

std::vector<Branch> standard_decomposition(const ForestRef& f) {
  std::vector<Branch> out;
  auto classes = dependence_classes(f);
  for (size_t c = 0; c < classes.size(); ++c) {
    Branch br;
    br.id = static_cast<BranchId>(c);
    br.parent_leaves = classes[c];
    // Collect tree nodes in parent id order.
    PrimeId root = f->root_of(f->leaf_prime(classes[c][0]));
    std::vector<PrimeId> nodes;
    for (int i = 0; i < f->node_count(); ++i)
      if (f->root_of(i) == root) nodes.push_back(i);
    br.node_to_parent = nodes;
    br.node_from_parent.assign(f->node_count(), -1);
    std::vector<SpectralForest::NodeSpec> specs(nodes.size());
    for (size_t k = 0; k < nodes.size(); ++k) br.node_from_parent[nodes[k]] = static_cast<PrimeId>(k);
    for (size_t k = 0; k < nodes.size(); ++k) {
      PrimeId old = nodes[k];
      SpectralForest::NodeSpec s{f->name(old), std::nullopt, f->edge_group(old), false};
      if (f->parent(old)) s.parent = br.node_from_parent[*f->parent(old)];
      specs[k] = s;
    }
    br.subforest = SpectralForest::create(std::move(specs));
    out.push_back(std::move(br));
  }
  return out;
}

bool is_h_local(const ForestRef& f) {
  for (int i = 0; i < f->node_count(); ++i)
    if (f->children(i).size() > 1) return false;
  return true;
}

std::optional<PrimeId> branch_core_prime(const ForestRef& t) {
  if (dependence_classes(t).size() != 1)
    throw scope_error("branch_core_prime expects a single tree");
  // Common proper ancestors of all leaves = the chain from the root down
  // to the first node that fails to sit on every leaf path.
  std::optional<PrimeId> best;
  PrimeId cur = t->root_of(t->leaf_prime(0));
  while (true) {
    bool common = true;
    for (int m = 0; m < t->leaf_count(); ++m)
      if (!t->prime_on_path(cur, m) || t->leaf_prime(m) == cur) {
        common = false;
        break;
      }
    if (!common) break;
    best = cur;
    if (t->children(cur).size() != 1) break;
    cur = t->children(cur)[0];
  }
  return best;
}

CutForest cut_branch(const ForestRef& f, PrimeId q) {
  if (q < 0 || q >= f->node_count()) throw scope_error("cut_branch: unknown prime");
  for (int m = 0; m < f->leaf_count(); ++m) {
    if (!f->prime_on_path(q, m))
      throw scope_error("cut_branch: '" + f->name(q) + "' is not below every maximal ideal");
    if (f->leaf_prime(m) == q)
      throw scope_error("cut_branch: cannot cut at the maximal ideal '" + f->name(q) + "'");
  }
  // Keep strict descendants of q.
  std::vector<PrimeId> kept;
  for (int i = 0; i < f->node_count(); ++i) {
    if (i == q) continue;
    // i is a descendant of q when q lies on the path from the root to i.
    int cur = i;
    bool desc = false;
    while (true) {
      auto par = f->parent(cur);
      if (!par) break;
      if (*par == q) {
        desc = true;
        break;
      }
      cur = *par;
      if (cur == q) {
        desc = true;
        break;
      }
    }
    // The walk above stops at q's child; also catch deeper descendants.
    if (!desc) {
      cur = i;
      while (f->parent(cur)) {
        cur = *f->parent(cur);
        if (cur == q) {
          desc = true;
          break;
        }
      }
    }
    if (desc) kept.push_back(i);
  }
  CutForest out;
  out.node_to_parent = kept;
  std::vector<PrimeId> from_parent(f->node_count(), -1);
  for (size_t k = 0; k < kept.size(); ++k) from_parent[kept[k]] = static_cast<PrimeId>(k);
  std::vector<SpectralForest::NodeSpec> specs(kept.size());
  for (size_t k = 0; k < kept.size(); ++k) {
    PrimeId old = kept[k];
    SpectralForest::NodeSpec s{f->name(old), std::nullopt, f->edge_group(old), false};
    auto par = f->parent(old);
    if (par && *par != q) s.parent = from_parent[*par];
    specs[k] = s;
  }
  out.forest = SpectralForest::create(std::move(specs));
  return out;
}

}  // namespace starforge
