#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace starforge {

// Outcome of a sampled or exact predicate run.  `note` names the law that
// justifies an exact verdict and the evidence class; witnesses are
// rendered ideal literals.
struct StarPredicateReport {
  enum class Verdict { holds_on_samples, fails_with_witness, exact_true, exact_false };

  std::string predicate;
  Verdict verdict = Verdict::holds_on_samples;
  int samples = 0;
  uint64_t seed = 0;
  std::string note;
  std::vector<std::string> witnesses;

  bool passed() const {
    return verdict == Verdict::holds_on_samples || verdict == Verdict::exact_true;
  }
};

std::string verdict_name(StarPredicateReport::Verdict v);

}  // namespace starforge
