#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "starforge/group.hpp"

namespace starforge {

// Ordered list of edge groups along one branch, root edge first (most
// significant).  Shared by every value vector and cut on that branch.
using BranchGroups = std::vector<RankOneGroup>;
using BranchRef = std::shared_ptr<const BranchGroups>;

BranchRef make_branch(std::vector<RankOneGroup> groups);
bool same_branch(const BranchRef& a, const BranchRef& b);

// Element of the lexicographic product of the branch groups.
class ValueVector {
 public:
  ValueVector(BranchRef branch, std::vector<Surd> comps);
  static ValueVector zero(BranchRef branch);

  const BranchRef& branch() const { return branch_; }
  int depth() const { return static_cast<int>(comps_.size()); }
  const Surd& comp(int level) const { return comps_[level - 1]; }  // 1-based
  Surd& comp(int level) { return comps_[level - 1]; }
  const std::vector<Surd>& comps() const { return comps_; }

  ValueVector operator+(const ValueVector& o) const;
  ValueVector operator-(const ValueVector& o) const;
  ValueVector operator-() const;
  bool operator==(const ValueVector& o) const;

  // Lexicographic sign of the first `upto` components (0 => all).
  int prefix_sign(int upto = 0) const;

  std::string render() const;  // "(c1,c2)"

 private:
  BranchRef branch_;
  std::vector<Surd> comps_;
};

std::strong_ordering compare(const ValueVector& x, const ValueVector& y);

// Upward-closed subset of a branch value group from the ModShift family:
//   S = { x : trunc_i(x - pivot) >= 0 }   (closed)
//   S = { x : trunc_i(x - pivot) >  0 }   (open)
// plus the sentinels ZERO (empty set) and FULL (the whole group).
// Canonical form: pivot components above the level are zero, and an open
// cut whose level group is Z is rewritten closed with the pivot bumped by
// the minimal positive element of the truncated product.
class Cut {
 public:
  enum class Kind { zero, full, shift };

  static Cut zero(BranchRef branch);
  static Cut full(BranchRef branch);
  static Cut closed_at(ValueVector pivot, int level);
  static Cut open_at(ValueVector pivot, int level);
  static Cut unit(BranchRef branch);  // closed at 0, full depth: v-set of V

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  bool is_full() const { return kind_ == Kind::full; }
  bool is_shift() const { return kind_ == Kind::shift; }
  int level() const { return level_; }
  bool closed() const { return closed_; }
  const ValueVector& pivot() const { return pivot_; }
  const BranchRef& branch() const { return branch_; }

  bool member(const ValueVector& x) const;

  // Reinterpret this cut on another branch whose first level() groups
  // match (used when lifting a localization back to a leaf).
  Cut rebase(BranchRef target) const;

  // The cut of the image module in R_P: prefix projection at `level`.
  Cut project(int level) const;

  Cut shifted(const ValueVector& by) const;  // pivot + by (level prefix)

  bool operator==(const Cut& o) const;

  std::string render() const;  // ">= (0,1) @2", "ZERO", "FULL"

 private:
  Cut(BranchRef branch, Kind k);
  void canonicalize();
  Kind kind_;
  BranchRef branch_;
  int level_ = 0;
  bool closed_ = true;
  ValueVector pivot_;
};

// Set-inclusion order through boundaries: larger boundary = smaller set.
// Cuts on one branch always form a chain.
std::strong_ordering boundary_order(const Cut& a, const Cut& b);
bool subset(const Cut& a, const Cut& b);  // S_a contained in S_b

enum class CutOp { meet_set, join_set, sum_set, colon_set };

// The four-way set algebra.  meet = intersection, join = union (already
// upward closed), sum = Minkowski sum (value set of a module product),
// colon = residual { x : x + S_b subset of S_a }.  The ModShift family is
// closed under all four; a gap in the case table throws invariant_error.
Cut cut_lattice(const Cut& a, const Cut& b, CutOp op);

// Structured probe set for oracle membership tests: pivot, pivot +- unit
// vectors, pivot +- small dense steps per component.
std::vector<ValueVector> probe_points(const Cut& c);

// A vector lying in exactly one of two distinct cuts, built exactly from
// the canonical forms (falls back beyond the fixed probe set when the
// boundary gap is narrower than every probe step).
ValueVector separating_vector(const Cut& a, const Cut& b);

}  // namespace starforge
