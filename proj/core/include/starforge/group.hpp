#pragma once

#include <string>
#include <vector>

#include "starforge/scalar.hpp"

namespace starforge {

// A rank-one ordered abelian group labelling one forest edge.  The menu is
// fixed: Z, Q, Z[1/n] and Z + Z*(a+b*sqrt(d)).  Each kind has exact order
// and exact membership; the only discrete one is Z.
class RankOneGroup {
 public:
  enum class Kind { integers, rationals, n_adic, quadratic };

  RankOneGroup() = default;  // Z

  static RankOneGroup integers();
  static RankOneGroup rationals();
  static RankOneGroup n_adic(long n);                              // n >= 2
  static RankOneGroup quadratic(Rational a, Rational b, long d);   // b != 0, d squarefree >= 2

  Kind kind() const { return kind_; }
  bool dense() const { return kind_ != Kind::integers; }
  long radix() const { return n_; }
  long surd_d() const { return d_; }
  const Rational& gen_a() const { return a_; }
  const Rational& gen_b() const { return b_; }

  // Canonical display name, accepted back by parse().
  std::string name() const;
  static RankOneGroup parse(const std::string& literal);

  bool contains(const Surd& v) const;

  // The minimal positive element (Z only).
  Surd min_positive() const;

  // Strictly descending positive members, starting at 1; used as probe
  // steps.  For the quadratic lattice these come from a best-approximation
  // sweep so that arbitrarily small members can be produced on demand.
  std::vector<Surd> probe_scales(int count) const;

  // A member strictly between lo and hi (dense kinds only, lo < hi).
  Surd between(const Surd& lo, const Surd& hi) const;

  bool operator==(const RankOneGroup& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
  }

  int sign(const Surd& v) const { return surd_sign(v, d_ ? d_ : 2); }
  std::strong_ordering compare(const Surd& x, const Surd& y) const {
    return surd_compare(x, y, d_ ? d_ : 2);
  }

 private:
  Kind kind_ = Kind::integers;
  long n_ = 0;  // n_adic radix
  long d_ = 0;  // quadratic radicand, 0 otherwise
  Rational a_{0}, b_{0};
};

bool is_squarefree(long d);

}  // namespace starforge
