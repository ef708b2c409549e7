#pragma once

#include <optional>
#include <vector>

#include "starforge/forest.hpp"

namespace starforge {

// A nonzero element of the quotient field given by its value at every
// maximal ideal; values agree on shared prefixes.
class PrincipalWitness {
 public:
  PrincipalWitness(ForestRef f, std::vector<ValueVector> values);
  const ForestRef& forest() const { return forest_; }
  const ValueVector& value(LeafId m) const { return values_[m]; }
  PrincipalWitness negated() const;

 private:
  ForestRef forest_;
  std::vector<ValueVector> values_;
};

// A nonzero R-submodule of the quotient field, presented by the cut of
// its localization at every maximal ideal.  Compatibility: the prefix
// projections at every shared prime agree.  No cut is ZERO; FULL cuts mean
// the module swallows that whole tree's localizations.
class IdealFamily {
 public:
  IdealFamily(ForestRef f, std::vector<Cut> cuts);

  static IdealFamily unit(const ForestRef& f);         // R
  static IdealFamily everything(const ForestRef& f);   // K (all FULL)
  static IdealFamily principal(const PrincipalWitness& w);

  const ForestRef& forest() const { return forest_; }
  const Cut& cut(LeafId m) const { return cuts_[m]; }
  int leaf_count() const { return static_cast<int>(cuts_.size()); }

  bool operator==(const IdealFamily& o) const;

 private:
  ForestRef forest_;
  std::vector<Cut> cuts_;
};

enum class IdealOp { sum, intersect, product };

IdealFamily ideal_op(const IdealFamily& a, const IdealFamily& b, IdealOp op);

// (a : b) = { x : x b subset of a }; nullopt when the residual is the zero
// module (b unbounded where a is not).
std::optional<IdealFamily> colon(const IdealFamily& a, const IdealFamily& b);

// The cut of a R_p over the truncated value group (independent of the
// chosen leaf above p).
Cut localize(const IdealFamily& a, PrimeId p);

IdealFamily restrict_to_branch(const IdealFamily& a, const Branch& t);
IdealFamily contract_from_branch(const IdealFamily& branch_ideal, const Branch& t,
                                 const ForestRef& parent);

// Nonzero d with d*a inside R, when one exists.
std::optional<PrincipalWitness> is_fractional(const IdealFamily& a);

// b inside a, leafwise.
bool contains(const IdealFamily& a, const IdealFamily& b);
bool is_integral(const IdealFamily& a);

IdealFamily shift(const IdealFamily& a, const PrincipalWitness& by, bool negate);

// The prime p as an ideal of R.
IdealFamily prime_ideal(const ForestRef& f, PrimeId p);
// R_p as an R-submodule of K.
IdealFamily localization_module(const ForestRef& f, PrimeId p);
// The intersection of R_M over a set of maximal ideals.
IdealFamily overring_module(const ForestRef& f, const std::vector<LeafId>& leaves);
// Re-extends a module constraint sitting at a node to the whole forest.
IdealFamily extend_cut_from_node(const ForestRef& f, PrimeId src, const Cut& w);

}  // namespace starforge
