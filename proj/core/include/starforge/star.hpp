#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "starforge/ideal.hpp"

namespace starforge {

// Closed expression language of closure operations on module families.
// Evaluation is exact; whether a given expression satisfies the closure
// axioms is checked by the axioms suite, not enforced structurally.
class StarExpr {
 public:
  enum class Tag { identity, divisorial, spectral, meet, branch_product, transport, extended };

  static StarExpr identity();
  static StarExpr divisorial();
  static StarExpr spectral(std::vector<PrimeId> primes);
  static StarExpr meet(std::vector<StarExpr> parts);
  // One inner operation per member of the standard decomposition.
  static StarExpr branch_product(std::map<BranchId, StarExpr> assignment);
  // Star operation induced through the quotient at a prime below every
  // maximal ideal; `inner` lives on the cut forest.
  static StarExpr transport(PrimeId core, StarExpr inner);
  // The induced operation on a standard-decomposition branch of `parent`.
  static StarExpr extended(StarExpr base, ForestRef parent, BranchId branch);

  Tag tag() const { return node_->tag; }
  const std::vector<PrimeId>& primes() const { return node_->primes; }
  const std::vector<StarExpr>& parts() const { return node_->parts; }
  const std::map<BranchId, StarExpr>& assignment() const { return node_->assignment; }
  PrimeId core() const { return node_->core; }
  const StarExpr& inner() const { return node_->parts[0]; }
  const ForestRef& parent_forest() const { return node_->parent; }
  BranchId branch() const { return node_->branch; }

  std::string render(const ForestRef& scope) const;
  bool operator==(const StarExpr& o) const;

 private:
  struct Node {
    Tag tag;
    std::vector<PrimeId> primes;
    std::vector<StarExpr> parts;
    std::map<BranchId, StarExpr> assignment;
    PrimeId core = -1;
    ForestRef parent;
    BranchId branch = -1;
  };
  explicit StarExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// I -> (R : (R : I)); modules with an unbounded tree close to K.
IdealFamily divisorial_closure(const IdealFamily& a);

IdealFamily apply(const StarExpr& s, const IdealFamily& a);

bool is_divisorial(const IdealFamily& a);
bool is_closed_under(const StarExpr& s, const IdealFamily& a);

}  // namespace starforge
