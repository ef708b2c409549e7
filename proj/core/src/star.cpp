#include "starforge/star.hpp"

#include <algorithm>

#include "starforge/errors.hpp"

namespace starforge {

StarExpr StarExpr::identity() {
  auto n = std::make_shared<Node>();
  n->tag = Tag::identity;
  return StarExpr(std::move(n));
}

StarExpr StarExpr::divisorial() {
  auto n = std::make_shared<Node>();
  n->tag = Tag::divisorial;
  return StarExpr(std::move(n));
}

StarExpr StarExpr::spectral(std::vector<PrimeId> primes) {
  if (primes.empty()) throw scope_error("spectral expression needs at least one prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  auto n = std::make_shared<Node>();
  n->tag = Tag::spectral;
  n->primes = std::move(primes);
  return StarExpr(std::move(n));
}

StarExpr StarExpr::meet(std::vector<StarExpr> parts) {
  if (parts.empty()) throw scope_error("meet expression needs parts");
  auto n = std::make_shared<Node>();
  n->tag = Tag::meet;
  n->parts = std::move(parts);
  return StarExpr(std::move(n));
}

StarExpr StarExpr::branch_product(std::map<BranchId, StarExpr> assignment) {
  if (assignment.empty()) throw scope_error("branch product needs an assignment");
  auto n = std::make_shared<Node>();
  n->tag = Tag::branch_product;
  n->assignment = std::move(assignment);
  return StarExpr(std::move(n));
}

StarExpr StarExpr::transport(PrimeId core, StarExpr inner) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::transport;
  n->core = core;
  n->parts.push_back(std::move(inner));
  return StarExpr(std::move(n));
}

StarExpr StarExpr::extended(StarExpr base, ForestRef parent, BranchId branch) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::extended;
  n->parts.push_back(std::move(base));
  n->parent = std::move(parent);
  n->branch = branch;
  return StarExpr(std::move(n));
}

std::string StarExpr::render(const ForestRef& scope) const {
  switch (tag()) {
    case Tag::identity:
      return "d";
    case Tag::divisorial:
      return "v";
    case Tag::spectral: {
      std::string out = "spec(";
      for (size_t i = 0; i < primes().size(); ++i) {
        if (i) out += ",";
        out += scope ? scope->name(primes()[i]) : std::to_string(primes()[i]);
      }
      return out + ")";
    }
    case Tag::meet: {
      std::string out = "meet(";
      for (size_t i = 0; i < parts().size(); ++i) {
        if (i) out += ",";
        out += parts()[i].render(scope);
      }
      return out + ")";
    }
    case Tag::branch_product: {
      std::string out = "branches{";
      bool first = true;
      auto decomp = scope ? standard_decomposition(scope) : std::vector<Branch>{};
      for (const auto& [id, e] : assignment()) {
        if (!first) out += ",";
        first = false;
        std::string key = std::to_string(id);
        ForestRef sub;
        if (scope && id < static_cast<BranchId>(decomp.size())) {
          sub = decomp[id].subforest;
          key = scope->name(scope->root_of(scope->leaf_prime(decomp[id].parent_leaves[0])));
        }
        out += key + ":" + e.render(sub);
      }
      return out + "}";
    }
    case Tag::transport: {
      ForestRef sub;
      std::string key = std::to_string(core());
      if (scope) {
        key = scope->name(core());
        sub = cut_branch(scope, core()).forest;
      }
      return "transport(" + key + "," + inner().render(sub) + ")";
    }
    case Tag::extended: {
      auto decomp = standard_decomposition(parent_forest());
      PrimeId root = parent_forest()->root_of(
          parent_forest()->leaf_prime(decomp[branch()].parent_leaves[0]));
      return "extend(" + parts()[0].render(parent_forest()) + "," +
             parent_forest()->name(root) + ")";
    }
  }
  return "?";
}

bool StarExpr::operator==(const StarExpr& o) const {
  if (node_ == o.node_) return true;
  if (tag() != o.tag()) return false;
  switch (tag()) {
    case Tag::identity:
    case Tag::divisorial:
      return true;
    case Tag::spectral:
      return primes() == o.primes();
    case Tag::meet:
      return parts() == o.parts();
    case Tag::branch_product:
      return assignment() == o.assignment();
    case Tag::transport:
      return core() == o.core() && inner() == o.inner();
    case Tag::extended:
      return branch() == o.branch() && parts()[0] == o.parts()[0] &&
             same_forest(parent_forest(), o.parent_forest());
  }
  return false;
}

IdealFamily divisorial_closure(const IdealFamily& a) {
  const ForestRef& f = a.forest();
  IdealFamily unit = IdealFamily::unit(f);
  auto inv = colon(unit, a);
  if (!inv) return IdealFamily::everything(f);
  auto back = colon(unit, *inv);
  if (!back) return IdealFamily::everything(f);
  return *back;
}

bool is_divisorial(const IdealFamily& a) { return divisorial_closure(a) == a; }

namespace {

IdealFamily apply_transport(const StarExpr& s, const IdealFamily& a) {
  const ForestRef& f = a.forest();
  const PrimeId q = s.core();
  if (q < 0 || q >= f->node_count()) throw scope_error("transport: unknown core prime");
  const int qd = f->depth(q);
  for (int m = 0; m < f->leaf_count(); ++m)
    if (!f->prime_on_path(q, m) || f->leaf_prime(m) == q)
      throw scope_error("transport: core must sit strictly below every maximal ideal");

  if (is_divisorial(a)) return a;

  // alpha^{-1}: the pivot of each cut, nudged into open cuts.
  std::vector<ValueVector> xs;
  for (int m = 0; m < f->leaf_count(); ++m) {
    const Cut& c = a.cut(m);
    if (!c.is_shift())
      throw invariant_error("transport: non-divisorial family with a FULL tree");
    ValueVector x = c.pivot();
    if (!c.closed()) x.comp(c.level()) = x.comp(c.level()) + Surd{Rational(1), Rational(0)};
    xs.push_back(std::move(x));
  }
  PrincipalWitness alpha_inv(f, std::move(xs));
  IdealFamily scaled = shift(a, alpha_inv, /*negate=*/true);

  IdealFamily unit = IdealFamily::unit(f);
  IdealFamily rq = localization_module(f, q);
  if (!contains(scaled, unit) || !contains(rq, scaled))
    throw invariant_error(
        "transport: scaled ideal not between R and R_Q for a non-divisorial input");

  CutForest cf = cut_branch(f, q);
  const ForestRef& d = cf.forest;
  // Map each leaf of the cut forest to its source leaf.
  std::vector<LeafId> src(d->leaf_count());
  for (int m2 = 0; m2 < d->leaf_count(); ++m2) {
    PrimeId old = cf.node_to_parent[d->leaf_prime(m2)];
    auto idx = f->leaf_index(old);
    if (!idx) throw invariant_error("transport: cut forest leaf lost its source");
    src[m2] = *idx;
  }
  std::vector<Cut> jcuts;
  for (int m2 = 0; m2 < d->leaf_count(); ++m2) {
    const Cut& c = scaled.cut(src[m2]);
    const BranchRef& db = d->branch(m2);
    if (c.level() == qd) {
      if (!c.closed() || c.pivot().prefix_sign(qd) != 0)
        throw invariant_error("transport: sandwiched cut not reducible at the core");
      jcuts.push_back(Cut::full(db));
      continue;
    }
    std::vector<Surd> comps(db->size());
    for (int k = qd + 1; k <= c.level(); ++k) comps[k - qd - 1] = c.pivot().comp(k);
    ValueVector piv(db, std::move(comps));
    jcuts.push_back(c.closed() ? Cut::closed_at(std::move(piv), c.level() - qd)
                               : Cut::open_at(std::move(piv), c.level() - qd));
  }
  IdealFamily j(d, std::move(jcuts));
  IdealFamily k = apply(s.inner(), j);

  std::vector<Cut> outcuts;
  for (int m = 0; m < f->leaf_count(); ++m) outcuts.push_back(Cut::unit(f->branch(m)));
  for (int m2 = 0; m2 < d->leaf_count(); ++m2) {
    const Cut& c = k.cut(m2);
    const BranchRef& fb = f->branch(src[m2]);
    if (c.is_full()) {
      outcuts[src[m2]] = Cut::closed_at(ValueVector::zero(fb), qd);
      continue;
    }
    if (!c.is_shift()) throw invariant_error("transport: inner produced an empty cut");
    std::vector<Surd> comps(fb->size());
    for (int t = 1; t <= c.level(); ++t) comps[qd + t - 1] = c.pivot().comp(t);
    ValueVector piv(fb, std::move(comps));
    outcuts[src[m2]] = c.closed() ? Cut::closed_at(std::move(piv), qd + c.level())
                                  : Cut::open_at(std::move(piv), qd + c.level());
  }
  IdealFamily pulled(f, std::move(outcuts));
  return shift(pulled, alpha_inv, /*negate=*/false);
}

}  // namespace

IdealFamily apply(const StarExpr& s, const IdealFamily& a) {
  const ForestRef& f = a.forest();
  switch (s.tag()) {
    case StarExpr::Tag::identity:
      return a;
    case StarExpr::Tag::divisorial:
      return divisorial_closure(a);
    case StarExpr::Tag::spectral: {
      std::optional<IdealFamily> acc;
      for (PrimeId p : s.primes()) {
        if (p < 0 || p >= f->node_count()) throw scope_error("spectral: unknown prime");
        IdealFamily piece = extend_cut_from_node(f, p, localize(a, p));
        acc = acc ? ideal_op(*acc, piece, IdealOp::intersect) : piece;
      }
      return *acc;
    }
    case StarExpr::Tag::meet: {
      std::optional<IdealFamily> acc;
      for (const StarExpr& part : s.parts()) {
        IdealFamily piece = apply(part, a);
        acc = acc ? ideal_op(*acc, piece, IdealOp::intersect) : piece;
      }
      return *acc;
    }
    case StarExpr::Tag::branch_product: {
      auto decomp = standard_decomposition(f);
      if (s.assignment().size() != decomp.size())
        throw scope_error("branch product: assignment does not cover the decomposition");
      std::vector<Cut> cuts;
      for (int m = 0; m < f->leaf_count(); ++m) cuts.push_back(Cut::unit(f->branch(m)));
      for (const auto& [id, expr] : s.assignment()) {
        if (id < 0 || id >= static_cast<BranchId>(decomp.size()))
          throw scope_error("branch product: unknown branch id");
        const Branch& br = decomp[id];
        IdealFamily closed = apply(expr, restrict_to_branch(a, br));
        for (size_t k2 = 0; k2 < br.parent_leaves.size(); ++k2)
          cuts[br.parent_leaves[k2]] =
              closed.cut(static_cast<LeafId>(k2)).rebase(f->branch(br.parent_leaves[k2]));
      }
      return IdealFamily(f, std::move(cuts));
    }
    case StarExpr::Tag::transport:
      return apply_transport(s, a);
    case StarExpr::Tag::extended: {
      auto decomp = standard_decomposition(s.parent_forest());
      if (s.branch() < 0 || s.branch() >= static_cast<BranchId>(decomp.size()))
        throw scope_error("extended: unknown branch");
      const Branch& br = decomp[s.branch()];
      if (!same_forest(f, br.subforest))
        throw scope_error("extended: ideal does not live on the named branch");
      IdealFamily lifted = contract_from_branch(a, br, s.parent_forest());
      IdealFamily closed = apply(s.parts()[0], lifted);
      return restrict_to_branch(closed, br);
    }
  }
  throw invariant_error("apply: unhandled expression tag");
}

bool is_closed_under(const StarExpr& s, const IdealFamily& a) { return apply(s, a) == a; }

}  // namespace starforge
