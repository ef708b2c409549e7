#pragma once

#include <map>
#include <variant>

#include "starforge/report.hpp"
#include "starforge/sampling.hpp"
#include "starforge/star.hpp"

namespace starforge {

// Closure-operation axioms on sampled families: extensive, idempotent,
// monotone, unit-fixing, homogeneous.
StarPredicateReport axioms_suite(const StarExpr& s, const ForestRef& f, uint64_t seed,
                                 int samples);

struct BranchTarget {
  BranchId id;
};
struct PrimeTarget {
  PrimeId id;
};
using ExtTarget = std::variant<BranchTarget, PrimeTarget>;

// Well-posedness of the induced operation on a flat overring: exact on
// standard-decomposition branches, sampled at general localizations.
StarPredicateReport extendability_check(const StarExpr& s, const ForestRef& f,
                                        const ExtTarget& target, uint64_t seed, int samples);

// Both composites of the decomposition bijections, on sampled ideals.
StarPredicateReport lambda_rho_roundtrip(const ForestRef& f,
                                         const std::map<BranchId, StarExpr>& assignment,
                                         uint64_t seed, int samples);

enum class StarProperty { stable, semifinite, spectral, finite_type, eab };
std::string property_name(StarProperty p);

StarPredicateReport property_report(const StarExpr& s, const ForestRef& f, StarProperty which,
                                    uint64_t seed, int samples);

// Property transfer across the decomposition: the biconditional for
// `which`, the meet-extension law, and extension transitivity.
StarPredicateReport transfer_suite(const ForestRef& f,
                                   const std::map<BranchId, StarExpr>& assignment,
                                   StarProperty which, uint64_t seed, int samples);

struct StarCount {
  bool exact = false;
  unsigned long long value = 0;
  std::string note;
};

StarCount count_star_operations(const ForestRef& f);

// Maximal ideals that fail the divisoriality test, by direct evaluation.
std::vector<LeafId> nondivisorial_leaves(const ForestRef& f);

// Exact enumeration of the stable operations (2^k expressions).
std::vector<StarExpr> stable_ops(const ForestRef& f);

// I -> (A:(A:I)) must be the identity for an m-canonical A.
StarPredicateReport m_canonical_check(const ForestRef& f, const IdealFamily& a, uint64_t seed,
                                      int samples);

StarPredicateReport closed_under_sum_check(const StarExpr& s, const ForestRef& f, uint64_t seed,
                                           int samples);

// Completeness, pairwise-product-K and local finiteness for the overring
// family induced by a partition of the maximal ideals.
StarPredicateReport jaffard_laws_check(const ForestRef& f,
                                       const std::vector<std::vector<LeafId>>& partition,
                                       uint64_t seed, int samples);

// Divisorial closure distributivity over finite intersections.
StarPredicateReport v_distributivity_check(const ForestRef& f, uint64_t seed, int samples);

// I^v versus the leafwise closure form (stable shape), sampled.
StarPredicateReport leafwise_v_form_check(const ForestRef& f, uint64_t seed, int samples);

// Small random well-formed star expressions over f.
StarExpr random_star_expr(const ForestRef& f, Rng& rng, int depth = 2);

}  // namespace starforge
