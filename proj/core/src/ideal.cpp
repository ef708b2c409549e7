#include "starforge/ideal.hpp"

#include <algorithm>

#include "starforge/errors.hpp"

namespace starforge {

namespace {

// Nodes sitting on more than one leaf path, where prefix agreement must be
// checked.  Checking every such node subsumes every pairwise constraint.
std::vector<PrimeId> shared_nodes(const ForestRef& f) {
  std::vector<PrimeId> out;
  for (int p = 0; p < f->node_count(); ++p)
    if (f->leaves_above(p).size() >= 2) out.push_back(p);
  return out;
}

void check_cut_compat(const ForestRef& f, const std::vector<Cut>& cuts, bool internal) {
  auto fail = [&](const std::string& msg) -> void {
    if (internal) throw invariant_error("family compatibility breach: " + msg);
    throw input_error("incompatible family: " + msg);
  };
  for (PrimeId p : shared_nodes(f)) {
    const int d = f->depth(p);
    std::optional<Cut> expected;
    for (LeafId m : f->leaves_above(p)) {
      Cut proj = cuts[m].project(d);
      if (!expected)
        expected = proj;
      else if (!(proj == *expected))
        fail("projections at '" + f->name(p) + "' differ: " + expected->render() +
             " vs " + proj.render());
    }
  }
}

void check_witness_compat(const ForestRef& f, const std::vector<ValueVector>& vals) {
  for (PrimeId p : shared_nodes(f)) {
    const int d = f->depth(p);
    auto above = f->leaves_above(p);
    for (size_t i = 1; i < above.size(); ++i) {
      const ValueVector& a = vals[above[0]];
      const ValueVector& b = vals[above[i]];
      for (int k = 1; k <= d; ++k)
        if (!(a.comp(k) == b.comp(k)))
          throw input_error("witness values disagree at shared prime '" + f->name(p) + "'");
    }
  }
}

}  // namespace

PrincipalWitness::PrincipalWitness(ForestRef f, std::vector<ValueVector> values)
    : forest_(std::move(f)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != forest_->leaf_count())
    throw dimension_error("witness needs one value per maximal ideal");
  for (int m = 0; m < forest_->leaf_count(); ++m)
    if (!same_branch(values_[m].branch(), forest_->branch(m)))
      throw dimension_error("witness value on the wrong branch");
  check_witness_compat(forest_, values_);
}

PrincipalWitness PrincipalWitness::negated() const {
  std::vector<ValueVector> vals;
  vals.reserve(values_.size());
  for (const auto& v : values_) vals.push_back(-v);
  return PrincipalWitness(forest_, std::move(vals));
}

IdealFamily::IdealFamily(ForestRef f, std::vector<Cut> cuts)
    : forest_(std::move(f)), cuts_(std::move(cuts)) {
  if (static_cast<int>(cuts_.size()) != forest_->leaf_count())
    throw dimension_error("family needs one cut per maximal ideal");
  for (int m = 0; m < forest_->leaf_count(); ++m) {
    if (cuts_[m].is_zero()) throw input_error("zero cut in a nonzero module family");
    if (!same_branch(cuts_[m].branch(), forest_->branch(m)))
      throw dimension_error("cut on the wrong branch at leaf " + std::to_string(m));
  }
  check_cut_compat(forest_, cuts_, /*internal=*/false);
}

IdealFamily IdealFamily::unit(const ForestRef& f) {
  std::vector<Cut> cuts;
  for (int m = 0; m < f->leaf_count(); ++m) cuts.push_back(Cut::unit(f->branch(m)));
  return IdealFamily(f, std::move(cuts));
}

IdealFamily IdealFamily::everything(const ForestRef& f) {
  std::vector<Cut> cuts;
  for (int m = 0; m < f->leaf_count(); ++m) cuts.push_back(Cut::full(f->branch(m)));
  return IdealFamily(f, std::move(cuts));
}

IdealFamily IdealFamily::principal(const PrincipalWitness& w) {
  const ForestRef& f = w.forest();
  std::vector<Cut> cuts;
  for (int m = 0; m < f->leaf_count(); ++m)
    cuts.push_back(Cut::closed_at(w.value(m), f->branch(m)->size()));
  return IdealFamily(f, std::move(cuts));
}

bool IdealFamily::operator==(const IdealFamily& o) const {
  if (!same_forest(forest_, o.forest_)) return false;
  for (size_t m = 0; m < cuts_.size(); ++m)
    if (!(cuts_[m] == o.cuts_[m])) return false;
  return true;
}

IdealFamily ideal_op(const IdealFamily& a, const IdealFamily& b, IdealOp op) {
  if (!same_forest(a.forest(), b.forest()))
    throw dimension_error("ideal_op: different domains");
  CutOp cop = op == IdealOp::sum       ? CutOp::join_set
              : op == IdealOp::intersect ? CutOp::meet_set
                                         : CutOp::sum_set;
  std::vector<Cut> cuts;
  for (int m = 0; m < a.leaf_count(); ++m)
    cuts.push_back(cut_lattice(a.cut(m), b.cut(m), cop));
  check_cut_compat(a.forest(), cuts, /*internal=*/true);
  return IdealFamily(a.forest(), std::move(cuts));
}

IdealFamily extend_cut_from_node(const ForestRef& f, PrimeId src, const Cut& w) {
  std::vector<Cut> cuts;
  for (int m = 0; m < f->leaf_count(); ++m) {
    if (f->prime_on_path(src, m)) {
      cuts.push_back(w.rebase(f->branch(m)));
      continue;
    }
    int s = f->shared_depth_with_prime(src, m);
    if (s == 0) {
      cuts.push_back(Cut::full(f->branch(m)));
      continue;
    }
    cuts.push_back(w.project(s).rebase(f->branch(m)));
  }
  check_cut_compat(f, cuts, /*internal=*/true);
  return IdealFamily(f, std::move(cuts));
}

std::optional<IdealFamily> colon(const IdealFamily& a, const IdealFamily& b) {
  if (!same_forest(a.forest(), b.forest()))
    throw dimension_error("colon: different domains");
  const ForestRef& f = a.forest();
  std::optional<IdealFamily> acc;
  for (int n = 0; n < f->leaf_count(); ++n) {
    Cut w = cut_lattice(a.cut(n), b.cut(n), CutOp::colon_set);
    if (w.is_zero()) return std::nullopt;
    IdealFamily piece = extend_cut_from_node(f, f->leaf_prime(n), w);
    acc = acc ? ideal_op(*acc, piece, IdealOp::intersect) : piece;
  }
  return acc;
}

Cut localize(const IdealFamily& a, PrimeId p) {
  const ForestRef& f = a.forest();
  if (p < 0 || p >= f->node_count()) throw scope_error("localize: unknown prime");
  auto above = f->leaves_above(p);
  if (above.empty()) throw scope_error("localize: prime has no maximal ideal above it");
  return a.cut(above[0]).project(f->depth(p));
}

IdealFamily restrict_to_branch(const IdealFamily& a, const Branch& t) {
  std::vector<Cut> cuts;
  for (size_t k = 0; k < t.parent_leaves.size(); ++k) {
    LeafId m = t.parent_leaves[k];
    cuts.push_back(a.cut(m).rebase(t.subforest->branch(static_cast<LeafId>(k))));
  }
  return IdealFamily(t.subforest, std::move(cuts));
}

IdealFamily contract_from_branch(const IdealFamily& branch_ideal, const Branch& t,
                                 const ForestRef& parent) {
  if (!same_forest(branch_ideal.forest(), t.subforest))
    throw dimension_error("contract_from_branch: ideal not on the branch subforest");
  std::vector<Cut> cuts;
  for (int m = 0; m < parent->leaf_count(); ++m) cuts.push_back(Cut::unit(parent->branch(m)));
  for (size_t k = 0; k < t.parent_leaves.size(); ++k)
    cuts[t.parent_leaves[k]] =
        branch_ideal.cut(static_cast<LeafId>(k)).rebase(parent->branch(t.parent_leaves[k]));
  return IdealFamily(parent, std::move(cuts));
}

std::optional<PrincipalWitness> is_fractional(const IdealFamily& a) {
  const ForestRef& f = a.forest();
  // Per-leaf residual (R_M : I R_M); pick a member of each, then repair
  // the prefixes upward (raising shared components keeps membership since
  // every cut is upward closed).
  std::vector<ValueVector> candidate;
  for (int m = 0; m < f->leaf_count(); ++m) {
    Cut w = cut_lattice(Cut::unit(f->branch(m)), a.cut(m), CutOp::colon_set);
    if (w.is_zero()) return std::nullopt;
    if (w.is_full()) {
      candidate.push_back(ValueVector::zero(f->branch(m)));
      continue;
    }
    ValueVector x = w.pivot();
    if (!w.closed()) x.comp(w.level()) = x.comp(w.level()) + Surd{Rational(1), Rational(0)};
    candidate.push_back(std::move(x));
  }
  // node value = max over leaves above of the candidate component there.
  std::vector<ValueVector> repaired = candidate;
  for (PrimeId p = 0; p < f->node_count(); ++p) {
    auto above = f->leaves_above(p);
    if (above.size() < 2) continue;
    const int d = f->depth(p);
    const RankOneGroup& g = f->edge_group(p);
    Surd mx = candidate[above[0]].comp(d);
    for (LeafId m : above)
      if (g.compare(candidate[m].comp(d), mx) > 0) mx = candidate[m].comp(d);
    for (LeafId m : above) repaired[m].comp(d) = mx;
  }
  PrincipalWitness w(f, repaired);
  // Raising components lexicographically can only move up inside the
  // residual cuts, but verify anyway.
  for (int m = 0; m < f->leaf_count(); ++m) {
    Cut wm = cut_lattice(Cut::unit(f->branch(m)), a.cut(m), CutOp::colon_set);
    if (!wm.member(w.value(m)))
      throw invariant_error("is_fractional: repaired witness left the residual");
  }
  return w;
}

bool contains(const IdealFamily& a, const IdealFamily& b) {
  if (!same_forest(a.forest(), b.forest()))
    throw dimension_error("contains: different domains");
  for (int m = 0; m < a.leaf_count(); ++m)
    if (!subset(b.cut(m), a.cut(m))) return false;
  return true;
}

bool is_integral(const IdealFamily& a) {
  return contains(IdealFamily::unit(a.forest()), a);
}

IdealFamily shift(const IdealFamily& a, const PrincipalWitness& by, bool negate) {
  if (!same_forest(a.forest(), by.forest()))
    throw dimension_error("shift: witness on a different domain");
  std::vector<Cut> cuts;
  for (int m = 0; m < a.leaf_count(); ++m) {
    ValueVector v = negate ? -by.value(m) : by.value(m);
    cuts.push_back(a.cut(m).shifted(v));
  }
  check_cut_compat(a.forest(), cuts, /*internal=*/true);
  return IdealFamily(a.forest(), std::move(cuts));
}

IdealFamily prime_ideal(const ForestRef& f, PrimeId p) {
  if (p < 0 || p >= f->node_count()) throw scope_error("prime_ideal: unknown prime");
  const int d = f->depth(p);
  std::vector<Cut> cuts;
  for (int m = 0; m < f->leaf_count(); ++m) {
    if (f->prime_on_path(p, m))
      cuts.push_back(Cut::open_at(ValueVector::zero(f->branch(m)), d));
    else
      cuts.push_back(Cut::unit(f->branch(m)));
  }
  return IdealFamily(f, std::move(cuts));
}

IdealFamily localization_module(const ForestRef& f, PrimeId p) {
  if (p < 0 || p >= f->node_count()) throw scope_error("localization_module: unknown prime");
  const int d = f->depth(p);
  std::vector<Cut> cuts;
  for (int m = 0; m < f->leaf_count(); ++m) {
    if (f->prime_on_path(p, m)) {
      cuts.push_back(Cut::closed_at(ValueVector::zero(f->branch(m)), d));
      continue;
    }
    int s = f->shared_depth_with_prime(p, m);
    if (s == 0)
      cuts.push_back(Cut::full(f->branch(m)));
    else
      cuts.push_back(Cut::closed_at(ValueVector::zero(f->branch(m)), s));
  }
  return IdealFamily(f, std::move(cuts));
}

IdealFamily overring_module(const ForestRef& f, const std::vector<LeafId>& leaves) {
  if (leaves.empty()) throw scope_error("overring_module: empty leaf set");
  std::vector<Cut> cuts;
  for (int n = 0; n < f->leaf_count(); ++n) {
    if (std::find(leaves.begin(), leaves.end(), n) != leaves.end()) {
      cuts.push_back(Cut::unit(f->branch(n)));
      continue;
    }
    int s = 0;
    for (LeafId m : leaves) s = std::max(s, f->shared_depth(n, m));
    if (s == 0)
      cuts.push_back(Cut::full(f->branch(n)));
    else
      cuts.push_back(Cut::closed_at(ValueVector::zero(f->branch(n)), s));
  }
  return IdealFamily(f, std::move(cuts));
}

}  // namespace starforge
