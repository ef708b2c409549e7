#pragma once

#include "starforge/suites.hpp"

namespace starforge {

// Symbolic abelian group value: a finite direct sum of atoms R/H, one per
// contributing maximal ideal, in leaf order.  The empty sum renders "0".
struct GroupDescriptor {
  std::vector<RankOneGroup> atoms;

  static GroupDescriptor zero() { return {}; }
  bool is_zero() const { return atoms.empty(); }
  std::string render() const;
  bool operator==(const GroupDescriptor& o) const;
};

// The certified inverse when (a * (R:a)) closes to R; nullopt otherwise.
// Non-fractional input is refused.
std::optional<IdealFamily> star_inverse(const StarExpr& s, const IdealFamily& a);

// Divisorial class group of the valuation presented by a single chain:
// zero for a discrete maximal edge, R/H for a dense one.
GroupDescriptor clv_of_valuation(const ForestRef& chain);

// Direct sum of the valuation class groups over the leaves that the
// closure fails to fix.
GroupDescriptor local_class_group(const ForestRef& f, const StarExpr& s);

// Full descriptor and its projection onto the kept leaves.
std::pair<GroupDescriptor, GroupDescriptor> localization_surjection(
    const ForestRef& f, const StarExpr& s, const std::vector<LeafId>& kept);

StarPredicateReport invertible_sum_check(const ForestRef& f, const StarExpr& s, uint64_t seed,
                                         int samples);

// The restriction map on invertible ideals: componentwise invertibility,
// product compatibility, injectivity and surjectivity on samples.
StarPredicateReport gamma_decomposition_check(const ForestRef& f, const StarExpr& s,
                                              uint64_t seed, int samples);

}  // namespace starforge
