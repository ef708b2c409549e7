#include "starforge/suites.hpp"

#include <algorithm>

#include "starforge/errors.hpp"
#include "starforge/literals.hpp"

namespace starforge {

std::string verdict_name(StarPredicateReport::Verdict v) {
  switch (v) {
    case StarPredicateReport::Verdict::holds_on_samples:
      return "holds-on-samples";
    case StarPredicateReport::Verdict::fails_with_witness:
      return "fails-with-witness";
    case StarPredicateReport::Verdict::exact_true:
      return "exact-true";
    case StarPredicateReport::Verdict::exact_false:
      return "exact-false";
  }
  return "?";
}

std::string property_name(StarProperty p) {
  switch (p) {
    case StarProperty::stable:
      return "stable";
    case StarProperty::semifinite:
      return "semifinite";
    case StarProperty::spectral:
      return "spectral";
    case StarProperty::finite_type:
      return "finite_type";
    case StarProperty::eab:
      return "eab";
  }
  return "?";
}

namespace {

using Verdict = StarPredicateReport::Verdict;

StarPredicateReport make_report(std::string predicate, uint64_t seed, int samples) {
  StarPredicateReport r;
  r.predicate = std::move(predicate);
  r.seed = seed;
  r.samples = samples;
  return r;
}

std::vector<IdealFamily> sample_pool(const ForestRef& f, uint64_t seed, int samples) {
  std::vector<IdealFamily> pool = structured_samples(f);
  IdealSampler gen(f, seed);
  for (int i = 0; i < samples; ++i) pool.push_back(gen.next());
  return pool;
}

// The divisorial closure taken leafwise over each valuation, ignoring the
// cross-leaf colon machinery: the stable shape of the closure.
IdealFamily leafwise_v(const IdealFamily& a) {
  const ForestRef& f = a.forest();
  std::vector<Cut> cuts;
  for (int m = 0; m < f->leaf_count(); ++m) {
    Cut unit = Cut::unit(f->branch(m));
    Cut inv = cut_lattice(unit, a.cut(m), CutOp::colon_set);
    cuts.push_back(cut_lattice(unit, inv, CutOp::colon_set));
  }
  return IdealFamily(f, std::move(cuts));
}

}  // namespace

StarPredicateReport axioms_suite(const StarExpr& s, const ForestRef& f, uint64_t seed,
                                 int samples) {
  auto r = make_report("axioms", seed, samples);
  IdealFamily unit = IdealFamily::unit(f);
  if (!(apply(s, unit) == unit)) {
    r.verdict = Verdict::fails_with_witness;
    r.note = "unit not fixed";
    r.witnesses.push_back("R");
    return r;
  }
  IdealSampler gen(f, seed);
  auto pool = sample_pool(f, seed ^ 0x9e3779b97f4a7c15ull, samples);
  for (size_t i = 0; i < pool.size(); ++i) {
    const IdealFamily& x = pool[i];
    IdealFamily cx = apply(s, x);
    if (!contains(cx, x)) {
      r.verdict = Verdict::fails_with_witness;
      r.note = "not extensive";
      r.witnesses.push_back(render_ideal_literal(x));
      return r;
    }
    if (!(apply(s, cx) == cx)) {
      r.verdict = Verdict::fails_with_witness;
      r.note = "not idempotent";
      r.witnesses.push_back(render_ideal_literal(x));
      return r;
    }
    // Monotone on a comparable pair.
    IdealFamily y = ideal_op(x, gen.next(), IdealOp::sum);
    if (!contains(apply(s, y), cx)) {
      r.verdict = Verdict::fails_with_witness;
      r.note = "not monotone";
      r.witnesses.push_back(render_ideal_literal(x));
      r.witnesses.push_back(render_ideal_literal(y));
      return r;
    }
    // Homogeneous under a principal scale.
    PrincipalWitness w = gen.next_witness();
    IdealFamily lhs = apply(s, shift(x, w, false));
    IdealFamily rhs = shift(cx, w, false);
    if (!(lhs == rhs)) {
      r.verdict = Verdict::fails_with_witness;
      r.note = "not homogeneous";
      r.witnesses.push_back(render_ideal_literal(x));
      return r;
    }
  }
  r.verdict = Verdict::holds_on_samples;
  r.note = "extensive, idempotent, monotone, unit-fixing, homogeneous on all samples";
  return r;
}

StarPredicateReport extendability_check(const StarExpr& s, const ForestRef& f,
                                        const ExtTarget& target, uint64_t seed, int samples) {
  auto r = make_report("extendability", seed, samples);
  if (std::holds_alternative<BranchTarget>(target)) {
    r.verdict = Verdict::exact_true;
    r.note = "standard-decomposition branch: extension is well-posed by the product bijection";
    return r;
  }
  if (s.tag() == StarExpr::Tag::identity) {
    r.verdict = Verdict::exact_true;
    r.note = "the identity extends to every flat overring";
    return r;
  }
  PrimeId p = std::get<PrimeTarget>(target).id;
  if (p < 0 || p >= f->node_count()) throw scope_error("extendability: unknown prime");
  const int dp = f->depth(p);
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    // A pair with equal extension to R_p: shared draws at depth <= dp,
    // independent deep tails, all levels strictly below the leaves' shared
    // structure to keep both families compatible.
    std::vector<Surd> shared(f->node_count()), deep1(f->node_count()), deep2(f->node_count());
    for (PrimeId q = 0; q < f->node_count(); ++q) {
      shared[q] = random_member(f->edge_group(q), rng, 3);
      deep1[q] = random_member(f->edge_group(q), rng, 3);
      deep2[q] = random_member(f->edge_group(q), rng, 3);
    }
    auto build = [&](const std::vector<Surd>& deep, Rng& flags) {
      std::vector<Cut> cuts;
      for (int m = 0; m < f->leaf_count(); ++m) {
        int b = 0;
        for (int o = 0; o < f->leaf_count(); ++o)
          if (o != m) b = std::max(b, f->shared_depth(m, o));
        int lo = std::max(b, f->prime_on_path(p, m) ? dp : 0);
        int n = static_cast<int>(f->branch(m)->size());
        int level = lo + 1 + static_cast<int>(flags.pick(std::max(1, n - lo)));
        level = std::min(level, n);
        bool open = flags.coin();
        std::vector<Surd> comps(n);
        for (int k = 1; k <= level; ++k) {
          PrimeId node = f->path(m)[k - 1];
          comps[k - 1] = (k <= std::max(b, dp)) ? shared[node] : deep[node];
        }
        ValueVector piv(f->branch(m), std::move(comps));
        cuts.push_back(open ? Cut::open_at(std::move(piv), level)
                            : Cut::closed_at(std::move(piv), level));
      }
      return IdealFamily(f, std::move(cuts));
    };
    Rng flags1(seed + 31 * i + 1), flags2(seed + 31 * i + 2);
    IdealFamily a = build(deep1, flags1);
    IdealFamily b = build(deep2, flags2);
    if (!(localize(a, p) == localize(b, p)))
      throw invariant_error("extendability sampler produced unequal extensions");
    Cut ca = localize(apply(s, a), p);
    Cut cb = localize(apply(s, b), p);
    if (!(ca == cb)) {
      r.verdict = Verdict::fails_with_witness;
      r.note = "closures separate at '" + f->name(p) + "'";
      r.witnesses.push_back(render_ideal_literal(a));
      r.witnesses.push_back(render_ideal_literal(b));
      return r;
    }
  }
  r.verdict = Verdict::holds_on_samples;
  r.note = "equal extensions kept equal closures at '" + f->name(p) + "'";
  return r;
}

StarExpr random_star_expr(const ForestRef& f, Rng& rng, int depth) {
  if (depth <= 0 || rng.pick(3) == 0) {
    if (rng.coin()) return StarExpr::identity();
    return StarExpr::divisorial();
  }
  switch (rng.pick(3)) {
    case 0: {
      // Spectral over all maximal ideals plus a random tail of primes.
      std::vector<PrimeId> primes;
      for (int m = 0; m < f->leaf_count(); ++m) primes.push_back(f->leaf_prime(m));
      for (PrimeId p = 0; p < f->node_count(); ++p)
        if (rng.coin()) primes.push_back(p);
      return StarExpr::spectral(std::move(primes));
    }
    case 1:
      return StarExpr::meet({random_star_expr(f, rng, depth - 1),
                             random_star_expr(f, rng, depth - 1)});
    default: {
      auto decomp = standard_decomposition(f);
      std::map<BranchId, StarExpr> asgn;
      for (const Branch& br : decomp)
        asgn.emplace(br.id, random_star_expr(br.subforest, rng, depth - 1));
      return StarExpr::branch_product(std::move(asgn));
    }
  }
}

StarPredicateReport lambda_rho_roundtrip(const ForestRef& f,
                                         const std::map<BranchId, StarExpr>& assignment,
                                         uint64_t seed, int samples) {
  auto r = make_report("lambda-rho-roundtrip", seed, samples);
  auto decomp = standard_decomposition(f);
  StarExpr rho = StarExpr::branch_product(assignment);

  // Extension of the product recovers each component on branch ideals.
  for (const Branch& br : decomp) {
    StarExpr ext = StarExpr::extended(rho, f, br.id);
    const StarExpr& comp = assignment.at(br.id);
    IdealSampler gen(br.subforest, seed + 101 * br.id);
    auto pool = structured_samples(br.subforest);
    for (int i = 0; i < samples; ++i) pool.push_back(gen.next());
    for (const IdealFamily& j : pool) {
      if (!(apply(ext, j) == apply(comp, j))) {
        r.verdict = Verdict::fails_with_witness;
        r.note = "extension of the product differs from the assigned component";
        r.witnesses.push_back(render_ideal_literal(j));
        return r;
      }
    }
  }

  // Reassembling the extensions of a sampled operation recovers it.
  Rng rng(seed ^ 0xabcdefull);
  for (int e = 0; e < 4; ++e) {
    StarExpr star = random_star_expr(f, rng);
    std::map<BranchId, StarExpr> lam;
    for (const Branch& br : decomp) lam.emplace(br.id, StarExpr::extended(star, f, br.id));
    StarExpr rho_lam = StarExpr::branch_product(lam);
    IdealSampler gen(f, seed + 7 * e);
    for (int i = 0; i < samples / 4 + 1; ++i) {
      IdealFamily x = gen.next();
      if (!(apply(rho_lam, x) == apply(star, x))) {
        r.verdict = Verdict::fails_with_witness;
        r.note = "rho(lambda(star)) differs from star: " + star.render(f);
        r.witnesses.push_back(render_ideal_literal(x));
        return r;
      }
    }
  }
  r.verdict = Verdict::holds_on_samples;
  r.note = "both composites are the identity on all samples (exact canonical equality)";
  return r;
}

namespace {

std::vector<std::vector<PrimeId>> star_spectral_candidates(const ForestRef& f) {
  // All prime subsets whose localization meet fixes R, i.e. candidates
  // for a spectral shape.  Small forests only.
  std::vector<std::vector<PrimeId>> out;
  const int n = f->node_count();
  IdealFamily unit = IdealFamily::unit(f);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<PrimeId> primes;
    for (int p = 0; p < n; ++p)
      if (mask & (1u << p)) primes.push_back(p);
    StarExpr cand = StarExpr::spectral(primes);
    if (apply(cand, unit) == unit) out.push_back(std::move(primes));
  }
  return out;
}

}  // namespace

StarPredicateReport property_report(const StarExpr& s, const ForestRef& f, StarProperty which,
                                    uint64_t seed, int samples) {
  auto r = make_report(property_name(which), seed, samples);
  switch (which) {
    case StarProperty::stable: {
      if (s.tag() == StarExpr::Tag::identity) {
        r.verdict = Verdict::exact_true;
        r.note = "intersection distributes for the identity";
        return r;
      }
      IdealSampler gen(f, seed);
      auto pool = sample_pool(f, seed, samples);
      for (const IdealFamily& x : pool) {
        IdealFamily y = gen.next();
        IdealFamily lhs = apply(s, ideal_op(x, y, IdealOp::intersect));
        IdealFamily rhs = ideal_op(apply(s, x), apply(s, y), IdealOp::intersect);
        if (!(lhs == rhs)) {
          r.verdict = Verdict::fails_with_witness;
          r.note = "intersection not preserved";
          r.witnesses.push_back(render_ideal_literal(x));
          r.witnesses.push_back(render_ideal_literal(y));
          return r;
        }
      }
      r.verdict = Verdict::holds_on_samples;
      r.note = "closure distributed over every sampled intersection";
      return r;
    }
    case StarProperty::semifinite: {
      IdealFamily unit = IdealFamily::unit(f);
      std::vector<std::pair<IdealFamily, std::string>> closed_primes;
      for (PrimeId p = 0; p < f->node_count(); ++p) {
        IdealFamily pf = prime_ideal(f, p);
        if (is_closed_under(s, pf)) closed_primes.emplace_back(pf, f->name(p));
      }
      IdealSampler gen(f, seed);
      for (int i = 0; i < samples; ++i) {
        IdealFamily x = ideal_op(gen.next(), unit, IdealOp::intersect);
        IdealFamily cx = apply(s, x);
        if (cx == unit) continue;
        bool found = false;
        for (const auto& [pf, name] : closed_primes)
          if (contains(pf, cx)) {
            found = true;
            break;
          }
        if (!found) {
          r.verdict = Verdict::fails_with_witness;
          r.note = "a proper closed ideal lies under no closed prime";
          r.witnesses.push_back(render_ideal_literal(cx));
          return r;
        }
      }
      r.verdict = Verdict::holds_on_samples;
      r.note = "every sampled proper closed ideal sat under a closed prime (prime set exact)";
      return r;
    }
    case StarProperty::spectral: {
      auto candidates = star_spectral_candidates(f);
      auto pool = sample_pool(f, seed, samples);
      for (const auto& primes : candidates) {
        StarExpr cand = StarExpr::spectral(primes);
        bool all = true;
        for (const IdealFamily& x : pool)
          if (!(apply(cand, x) == apply(s, x))) {
            all = false;
            break;
          }
        if (all) {
          r.verdict = Verdict::holds_on_samples;
          std::string names;
          for (PrimeId p : primes) names += (names.empty() ? "" : ",") + f->name(p);
          r.note = "matches the localization meet over {" + names + "} on all samples";
          return r;
        }
      }
      r.verdict = Verdict::fails_with_witness;
      r.note = "no prime subset reproduces the closure on the sample set (exhaustive subsets)";
      return r;
    }
    case StarProperty::finite_type: {
      auto pool = sample_pool(f, seed, samples);
      for (const IdealFamily& x : pool)
        if (!(apply(s, x) == x)) {
          r.verdict = Verdict::fails_with_witness;
          r.note = "differs from the identity (finite-type closures collapse to it here)";
          r.witnesses.push_back(render_ideal_literal(x));
          return r;
        }
      r.verdict = Verdict::holds_on_samples;
      r.note = "agrees with the identity on all samples";
      return r;
    }
    case StarProperty::eab: {
      r.verdict = Verdict::exact_true;
      r.note = "finitely generated ideals are principal, so cancellation is automatic";
      return r;
    }
  }
  throw invariant_error("property_report: unhandled property");
}

StarPredicateReport transfer_suite(const ForestRef& f,
                                   const std::map<BranchId, StarExpr>& assignment,
                                   StarProperty which, uint64_t seed, int samples) {
  auto r = make_report("transfer." + property_name(which), seed, samples);
  auto decomp = standard_decomposition(f);
  StarExpr rho = StarExpr::branch_product(assignment);

  StarPredicateReport whole = property_report(rho, f, which, seed, samples);
  bool parts_pass = true;
  for (const Branch& br : decomp)
    if (!property_report(assignment.at(br.id), br.subforest, which, seed + br.id + 1, samples)
             .passed())
      parts_pass = false;
  bool bicond = whole.passed() == parts_pass;

  // Meet-extension law with the pair {product, divisorial}.
  bool meet_law = true;
  StarExpr v = StarExpr::divisorial();
  StarExpr both = StarExpr::meet({rho, v});
  for (const Branch& br : decomp) {
    StarExpr lhs = StarExpr::extended(both, f, br.id);
    StarExpr rhs = StarExpr::meet(
        {StarExpr::extended(rho, f, br.id), StarExpr::extended(v, f, br.id)});
    IdealSampler gen(br.subforest, seed + 997 * br.id);
    for (int i = 0; i < std::max(10, samples / 4); ++i) {
      IdealFamily j = gen.next();
      if (!(apply(lhs, j) == apply(rhs, j))) {
        meet_law = false;
        r.witnesses.push_back(render_ideal_literal(j));
        break;
      }
    }
  }

  // Transitivity: extending to a branch then localizing agrees with
  // localizing directly, for the product operation.
  bool transitive = true;
  IdealSampler gen(f, seed + 4242);
  for (const Branch& br : decomp) {
    StarExpr ext = StarExpr::extended(rho, f, br.id);
    for (int i = 0; i < std::max(5, samples / 8); ++i) {
      IdealFamily x = gen.next();
      IdealFamily xr = restrict_to_branch(x, br);
      IdealFamily closed_branch = apply(ext, xr);
      IdealFamily closed_whole = apply(rho, x);
      for (PrimeId psub = 0; psub < br.subforest->node_count(); ++psub) {
        PrimeId pparent = br.node_to_parent[psub];
        if (!(localize(closed_branch, psub) == localize(closed_whole, pparent))) {
          transitive = false;
          r.witnesses.push_back(render_ideal_literal(x));
          break;
        }
      }
      if (!transitive) break;
    }
  }

  r.verdict = (bicond && meet_law && transitive) ? Verdict::holds_on_samples
                                                 : Verdict::fails_with_witness;
  r.note = std::string("biconditional=") + (bicond ? "ok" : "FAIL") +
           "; meet-extension=" + (meet_law ? "ok" : "FAIL") +
           "; transitivity=" + (transitive ? "ok" : "FAIL") + "; ascending-chain leg skipped";
  return r;
}

std::vector<LeafId> nondivisorial_leaves(const ForestRef& f) {
  std::vector<LeafId> out;
  for (int m = 0; m < f->leaf_count(); ++m)
    if (!is_divisorial(prime_ideal(f, f->leaf_prime(m)))) out.push_back(m);
  return out;
}

StarCount count_star_operations(const ForestRef& f) {
  StarCount out;
  if (is_h_local(f)) {
    unsigned long long c = 1;
    for (int m = 0; m < f->leaf_count(); ++m) {
      const auto& path = f->path(m);
      if (f->edge_group(path.back()).dense()) c *= 2;
    }
    out.exact = true;
    out.value = c;
    out.note = "h-local: one factor of 2 per dense maximal edge";
    return out;
  }
  unsigned long long bound = 1;
  for (const Branch& br : standard_decomposition(f)) {
    if (br.subforest->leaf_count() == 1) {
      const auto& path = br.subforest->path(0);
      bound *= br.subforest->edge_group(path.back()).dense() ? 2 : 1;
      continue;
    }
    auto core = branch_core_prime(br.subforest);
    if (!core) {
      bound *= 1;
      continue;
    }
    CutForest cf = cut_branch(br.subforest, *core);
    bound *= count_star_operations(cf.forest).value;
  }
  out.exact = false;
  out.value = bound;
  out.note = "lower bound; not exact: star vs (semi)star gap after the branch cut";
  return out;
}

std::vector<StarExpr> stable_ops(const ForestRef& f) {
  auto decomp = standard_decomposition(f);
  if (decomp.size() > 1) {
    // Cross product of the per-branch enumerations.
    std::vector<std::map<BranchId, StarExpr>> acc(1);
    for (const Branch& br : decomp) {
      std::vector<StarExpr> local = stable_ops(br.subforest);
      std::vector<std::map<BranchId, StarExpr>> next;
      for (const auto& partial : acc)
        for (const StarExpr& e : local) {
          auto copy = partial;
          copy.emplace(br.id, e);
          next.push_back(std::move(copy));
        }
      acc = std::move(next);
    }
    std::vector<StarExpr> out;
    for (auto& asgn : acc) out.push_back(StarExpr::branch_product(std::move(asgn)));
    return out;
  }
  if (f->leaf_count() == 1) {
    std::vector<StarExpr> out{StarExpr::identity()};
    if (!is_divisorial(prime_ideal(f, f->leaf_prime(0)))) out.push_back(StarExpr::divisorial());
    return out;
  }
  auto core = branch_core_prime(f);
  if (!core) throw invariant_error("stable_ops: non-local tree without a core prime");
  CutForest cf = cut_branch(f, *core);
  std::vector<StarExpr> out;
  for (const StarExpr& e : stable_ops(cf.forest))
    out.push_back(StarExpr::transport(*core, e));
  return out;
}

StarPredicateReport m_canonical_check(const ForestRef& f, const IdealFamily& a, uint64_t seed,
                                      int samples) {
  auto r = make_report("m-canonical", seed, samples);
  if (!is_fractional(a)) throw input_error("m_canonical_check: candidate is not fractional");
  auto closure = [&](const IdealFamily& x) -> std::optional<IdealFamily> {
    auto inner = colon(a, x);
    if (!inner) return std::nullopt;
    return colon(a, *inner);
  };
  auto pool = sample_pool(f, seed, samples);
  for (const IdealFamily& x : pool) {
    auto back = closure(x);
    if (!back || !(*back == x)) {
      r.verdict = Verdict::fails_with_witness;
      r.note = back ? "double residual moved the ideal" : "residual collapsed to zero";
      r.witnesses.push_back(render_ideal_literal(x));
      return r;
    }
  }
  r.verdict = Verdict::holds_on_samples;
  r.note = "double residual fixed every sampled fractional ideal";
  return r;
}

StarPredicateReport closed_under_sum_check(const StarExpr& s, const ForestRef& f, uint64_t seed,
                                           int samples) {
  auto r = make_report("closed-under-sum", seed, samples);
  IdealSampler gen(f, seed);
  const bool hloc = is_h_local(f);
  int violations = 0;
  for (int i = 0; i < samples; ++i) {
    if (hloc) {
      IdealFamily x = apply(s, gen.next());
      IdealFamily y = apply(s, gen.next());
      IdealFamily sum = ideal_op(x, y, IdealOp::sum);
      if (!is_closed_under(s, sum)) {
        r.verdict = Verdict::fails_with_witness;
        r.note = "sum of closed ideals escaped the closure";
        r.witnesses.push_back(render_ideal_literal(x));
        r.witnesses.push_back(render_ideal_literal(y));
        return r;
      }
    } else {
      IdealFamily x = gen.next();
      if (is_closed_under(s, x)) continue;
      IdealFamily y = gen.next();
      bool meet_closed = is_closed_under(s, ideal_op(x, y, IdealOp::intersect));
      bool sum_closed = is_closed_under(s, ideal_op(x, y, IdealOp::sum));
      if (meet_closed && sum_closed) {
        ++violations;
        if (r.witnesses.empty()) {
          r.witnesses.push_back(render_ideal_literal(x));
          r.witnesses.push_back(render_ideal_literal(y));
        }
      }
    }
  }
  if (hloc) {
    r.verdict = Verdict::holds_on_samples;
    r.note = "sums of closed ideals stayed closed on every sample";
  } else {
    r.verdict = violations == 0 ? Verdict::holds_on_samples : Verdict::fails_with_witness;
    r.note = "exploratory outside the locally-split premise; violations=" +
             std::to_string(violations);
  }
  return r;
}

StarPredicateReport jaffard_laws_check(const ForestRef& f,
                                       const std::vector<std::vector<LeafId>>& partition,
                                       uint64_t seed, int samples) {
  auto r = make_report("overring-family-laws", seed, samples);
  std::vector<IdealFamily> rings;
  for (const auto& cls : partition) rings.push_back(overring_module(f, cls));
  IdealFamily k = IdealFamily::everything(f);
  for (size_t i = 0; i < rings.size(); ++i)
    for (size_t j = i + 1; j < rings.size(); ++j)
      if (!(ideal_op(rings[i], rings[j], IdealOp::product) == k)) {
        r.verdict = Verdict::exact_false;
        r.note = "pairwise product misses the quotient field (classes " + std::to_string(i) +
                 "," + std::to_string(j) + ")";
        return r;
      }
  IdealSampler gen(f, seed);
  for (int i = 0; i < samples; ++i) {
    IdealFamily x = gen.next();
    std::optional<IdealFamily> meet;
    for (const IdealFamily& t : rings) {
      IdealFamily ext = ideal_op(x, t, IdealOp::product);
      meet = meet ? ideal_op(*meet, ext, IdealOp::intersect) : ext;
    }
    if (!(*meet == x)) {
      r.verdict = Verdict::fails_with_witness;
      r.note = "completeness failed";
      r.witnesses.push_back(render_ideal_literal(x));
      return r;
    }
  }
  r.verdict = Verdict::holds_on_samples;
  r.note = "complete on samples; pairwise products exact; local finiteness is finiteness";
  return r;
}

StarPredicateReport v_distributivity_check(const ForestRef& f, uint64_t seed, int samples) {
  auto r = make_report("v-distributivity", seed, samples);
  IdealSampler gen(f, seed);
  auto pool = sample_pool(f, seed, samples);
  for (const IdealFamily& x : pool) {
    IdealFamily y = gen.next();
    IdealFamily lhs = divisorial_closure(ideal_op(x, y, IdealOp::intersect));
    IdealFamily rhs =
        ideal_op(divisorial_closure(x), divisorial_closure(y), IdealOp::intersect);
    if (!(lhs == rhs)) {
      r.verdict = Verdict::fails_with_witness;
      r.note = "divisorial closure failed to distribute";
      r.witnesses.push_back(render_ideal_literal(x));
      r.witnesses.push_back(render_ideal_literal(y));
      return r;
    }
  }
  r.verdict = Verdict::holds_on_samples;
  r.note = "distributed over every sampled intersection";
  return r;
}

StarPredicateReport leafwise_v_form_check(const ForestRef& f, uint64_t seed, int samples) {
  auto r = make_report("leafwise-v-form", seed, samples);
  auto pool = sample_pool(f, seed, samples);
  for (const IdealFamily& x : pool) {
    if (!(divisorial_closure(x) == leafwise_v(x))) {
      r.verdict = Verdict::fails_with_witness;
      r.note = "global closure exceeds the leafwise form";
      r.witnesses.push_back(render_ideal_literal(x));
      return r;
    }
  }
  r.verdict = Verdict::holds_on_samples;
  r.note = "closure matched the leafwise form on all samples";
  return r;
}

}  // namespace starforge
