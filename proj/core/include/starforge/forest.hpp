#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "starforge/ordgroups.hpp"

namespace starforge {

using PrimeId = int;
using LeafId = int;   // index into leaves() order
using BranchId = int;

class SpectralForest;
using ForestRef = std::shared_ptr<const SpectralForest>;

// Finite labelled forest presenting the nonzero spectrum of a semilocal
// finite-dimensional Bezout domain.  Roots are the height-one primes,
// leaves are the maximal ideals; each node carries the rank-one group of
// the edge from its parent (roots included).
class SpectralForest {
 public:
  struct NodeSpec {
    std::string name;
    std::optional<PrimeId> parent;  // index into the spec vector
    RankOneGroup group;
    bool declared_maximal = false;  // optional file annotation
  };

  // Structural diagnostics; empty means the invariants hold.
  static std::vector<std::string> check(const std::vector<NodeSpec>& specs);
  // Throws input_error when check() is nonempty.
  static ForestRef create(std::vector<NodeSpec> specs);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const std::string& name(PrimeId p) const { return nodes_[p].name; }
  const RankOneGroup& edge_group(PrimeId p) const { return nodes_[p].group; }
  std::optional<PrimeId> parent(PrimeId p) const { return nodes_[p].parent; }
  const std::vector<PrimeId>& children(PrimeId p) const { return children_[p]; }
  int depth(PrimeId p) const { return depth_[p]; }  // roots have depth 1
  bool is_leaf(PrimeId p) const { return children_[p].empty(); }
  PrimeId root_of(PrimeId p) const { return root_[p]; }

  int leaf_count() const { return static_cast<int>(leaves_.size()); }
  PrimeId leaf_prime(LeafId m) const { return leaves_[m]; }
  std::optional<LeafId> leaf_index(PrimeId p) const;
  const std::vector<PrimeId>& leaves() const { return leaves_; }

  // Path of primes from the root edge to the leaf, and its value branch.
  const std::vector<PrimeId>& path(LeafId m) const { return paths_[m]; }
  const BranchRef& branch(LeafId m) const { return branches_[m]; }

  std::optional<PrimeId> node_by_name(const std::string& name) const;

  // Leaves lying above (at or below in the tree) the given prime.
  std::vector<LeafId> leaves_above(PrimeId p) const;
  bool prime_on_path(PrimeId p, LeafId m) const;

  // Depth of the deepest common node of two leaves; 0 when disjoint trees.
  int shared_depth(LeafId a, LeafId b) const;
  // Depth of the deepest node common to the path of p and the path of m.
  int shared_depth_with_prime(PrimeId p, LeafId m) const;

  int max_depth() const;
  bool all_discrete() const;

 private:
  struct Node {
    std::string name;
    std::optional<PrimeId> parent;
    RankOneGroup group;
  };
  std::vector<Node> nodes_;
  std::vector<std::vector<PrimeId>> children_;
  std::vector<int> depth_;
  std::vector<PrimeId> root_;
  std::vector<PrimeId> leaves_;
  std::vector<std::vector<PrimeId>> paths_;   // per leaf
  std::vector<BranchRef> branches_;           // per leaf
};

bool same_forest(const ForestRef& a, const ForestRef& b);  // structural

// Partition of the maximal ideals by dependence: leaves sharing a tree.
std::vector<std::vector<LeafId>> dependence_classes(const ForestRef& f);

// One member of the standard decomposition: a tree of the forest together
// with its presentation as a forest of its own.
struct Branch {
  BranchId id = 0;
  ForestRef subforest;
  std::vector<LeafId> parent_leaves;       // leaf ids in the parent forest
  std::vector<PrimeId> node_to_parent;     // sub node id -> parent node id
  std::vector<PrimeId> node_from_parent;   // parent node id -> sub id or -1
};

std::vector<Branch> standard_decomposition(const ForestRef& f);

bool is_h_local(const ForestRef& f);

// The deepest prime lying strictly below every maximal ideal of a single
// tree; nullopt exactly when the tree is one height-one maximal ideal
// (the rank-one local sentinel).
std::optional<PrimeId> branch_core_prime(const ForestRef& single_tree);

// Quotient presentation: the subforest strictly above q, with q's children
// as the new roots.  Requires q strictly below every leaf.
struct CutForest {
  ForestRef forest;
  std::vector<PrimeId> node_to_parent;    // new node -> old node
};
CutForest cut_branch(const ForestRef& f, PrimeId q);

}  // namespace starforge
