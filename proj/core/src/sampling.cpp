#include "starforge/sampling.hpp"

#include "starforge/errors.hpp"

namespace starforge {

Surd random_member(const RankOneGroup& g, Rng& rng, int B) {
  switch (g.kind()) {
    case RankOneGroup::Kind::integers:
      return Surd{Rational(rng.range(-B, B)), Rational(0)};
    case RankOneGroup::Kind::rationals:
    case RankOneGroup::Kind::n_adic: {
      long base = g.kind() == RankOneGroup::Kind::rationals ? 2 : g.radix();
      long j = rng.range(0, 3);
      long den = 1;
      for (long t = 0; t < j; ++t) den *= base;
      long k = rng.range(-B * den, B * den);
      Rational q(k, den);
      q.canonicalize();
      return Surd{q, Rational(0)};
    }
    case RankOneGroup::Kind::quadratic: {
      long p = rng.range(-B, B);
      long q = rng.range(-B, B);
      return Surd{Rational(p) + Rational(q) * g.gen_a(), Rational(q) * g.gen_b()};
    }
  }
  return Surd{};
}

IdealSampler::IdealSampler(ForestRef f, uint64_t seed, int B)
    : forest_(std::move(f)), rng_(seed), bound_(B) {}

IdealFamily IdealSampler::next() {
  const ForestRef& f = forest_;
  // One component drawn per node keeps every shared prefix consistent.
  std::vector<Surd> node_val(f->node_count());
  for (PrimeId p = 0; p < f->node_count(); ++p)
    node_val[p] = random_member(f->edge_group(p), rng_, bound_);

  std::vector<Cut> cuts(f->leaf_count(), Cut::full(f->branch(0)));
  for (const auto& cls : dependence_classes(f)) {
    // Deepest-branching depth per leaf: levels stay strictly below it in
    // leafwise mode so projections at shared primes are the closed prefix.
    bool branch_local = cls.size() >= 1 && rng_.pick(4) == 0;
    if (branch_local) {
      // One cut at a prime common to the whole class.
      const auto& path0 = f->path(cls[0]);
      int max_common = static_cast<int>(path0.size());
      for (LeafId m : cls) max_common = std::min(max_common, f->shared_depth(cls[0], m));
      if (cls.size() == 1) max_common = static_cast<int>(path0.size());
      int d = static_cast<int>(rng_.pick(max_common)) + 1;
      bool open = rng_.coin();
      for (LeafId m : cls) {
        std::vector<Surd> comps(f->branch(m)->size());
        for (int k = 1; k <= d; ++k) comps[k - 1] = node_val[f->path(m)[k - 1]];
        ValueVector piv(f->branch(m), std::move(comps));
        cuts[m] = open ? Cut::open_at(std::move(piv), d) : Cut::closed_at(std::move(piv), d);
      }
      continue;
    }
    for (LeafId m : cls) {
      int b = 0;
      for (LeafId o : cls)
        if (o != m) b = std::max(b, f->shared_depth(m, o));
      int n = static_cast<int>(f->branch(m)->size());
      int level = b + 1 + static_cast<int>(rng_.pick(n - b));
      bool open = rng_.coin();
      std::vector<Surd> comps(n);
      for (int k = 1; k <= level; ++k) comps[k - 1] = node_val[f->path(m)[k - 1]];
      ValueVector piv(f->branch(m), std::move(comps));
      cuts[m] = open ? Cut::open_at(std::move(piv), level) : Cut::closed_at(std::move(piv), level);
    }
  }
  return IdealFamily(f, std::move(cuts));
}

PrincipalWitness IdealSampler::next_witness() {
  const ForestRef& f = forest_;
  std::vector<Surd> node_val(f->node_count());
  for (PrimeId p = 0; p < f->node_count(); ++p)
    node_val[p] = random_member(f->edge_group(p), rng_, bound_);
  std::vector<ValueVector> vals;
  for (int m = 0; m < f->leaf_count(); ++m) {
    std::vector<Surd> comps(f->branch(m)->size());
    for (size_t k = 0; k < comps.size(); ++k) comps[k] = node_val[f->path(m)[k]];
    vals.emplace_back(f->branch(m), std::move(comps));
  }
  return PrincipalWitness(f, std::move(vals));
}

std::vector<IdealFamily> structured_samples(const ForestRef& f) {
  std::vector<IdealFamily> out;
  out.push_back(IdealFamily::unit(f));
  for (PrimeId p = 0; p < f->node_count(); ++p) {
    out.push_back(prime_ideal(f, p));
    out.push_back(localization_module(f, p));
  }
  for (const auto& cls : dependence_classes(f)) out.push_back(overring_module(f, cls));
  return out;
}

}  // namespace starforge
