#pragma once

#include <cstdint>
#include <random>

#include "starforge/ideal.hpp"

namespace starforge {

// Deterministic source; all suites thread an explicit seed through this.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t pick(uint64_t n) { return n ? eng_() % n : 0; }  // [0, n)
  long range(long lo, long hi) { return lo + static_cast<long>(pick(hi - lo + 1)); }
  bool coin() { return pick(2) == 0; }

 private:
  std::mt19937_64 eng_;
};

// A small member of the group, granularity bounded by B.
Surd random_member(const RankOneGroup& g, Rng& rng, int B);

// Random compatible families: per tree either one shared low-level cut
// (a scaled localization at a common prime) or leafwise cuts below the
// deepest branching node, with shared components drawn once per node.
class IdealSampler {
 public:
  IdealSampler(ForestRef f, uint64_t seed, int B = 3);
  IdealFamily next();
  PrincipalWitness next_witness();

 private:
  ForestRef forest_;
  Rng rng_;
  int bound_;
};

// Deterministic catalogue: unit, primes, localizations, per-tree overrings.
std::vector<IdealFamily> structured_samples(const ForestRef& f);

}  // namespace starforge
