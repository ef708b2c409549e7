#include "starforge/ordgroups.hpp"

#include <algorithm>

#include "starforge/errors.hpp"

namespace starforge {

BranchRef make_branch(std::vector<RankOneGroup> groups) {
  if (groups.empty()) throw input_error("branch needs at least one edge group");
  return std::make_shared<const BranchGroups>(std::move(groups));
}

bool same_branch(const BranchRef& a, const BranchRef& b) {
  if (a == b) return true;
  if (!a || !b || a->size() != b->size()) return false;
  for (size_t i = 0; i < a->size(); ++i)
    if (!((*a)[i] == (*b)[i])) return false;
  return true;
}

ValueVector::ValueVector(BranchRef branch, std::vector<Surd> comps)
    : branch_(std::move(branch)), comps_(std::move(comps)) {
  if (!branch_ || comps_.size() != branch_->size())
    throw dimension_error("value vector length mismatch with branch depth");
  for (size_t i = 0; i < comps_.size(); ++i)
    if (!(*branch_)[i].contains(comps_[i]))
      throw input_error("component " + std::to_string(i + 1) + " = " +
                        render_surd(comps_[i], (*branch_)[i].surd_d()) +
                        " is not a member of " + (*branch_)[i].name());
}

ValueVector ValueVector::zero(BranchRef branch) {
  std::vector<Surd> c(branch->size());
  return ValueVector(std::move(branch), std::move(c));
}

ValueVector ValueVector::operator+(const ValueVector& o) const {
  if (!same_branch(branch_, o.branch_)) throw dimension_error("vector add: branch mismatch");
  std::vector<Surd> c(comps_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = comps_[i] + o.comps_[i];
  return ValueVector(branch_, std::move(c));
}

ValueVector ValueVector::operator-(const ValueVector& o) const {
  if (!same_branch(branch_, o.branch_)) throw dimension_error("vector sub: branch mismatch");
  std::vector<Surd> c(comps_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = comps_[i] - o.comps_[i];
  return ValueVector(branch_, std::move(c));
}

ValueVector ValueVector::operator-() const {
  std::vector<Surd> c(comps_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -comps_[i];
  return ValueVector(branch_, std::move(c));
}

bool ValueVector::operator==(const ValueVector& o) const {
  return same_branch(branch_, o.branch_) && comps_ == o.comps_;
}

int ValueVector::prefix_sign(int upto) const {
  int n = upto == 0 ? depth() : upto;
  for (int k = 1; k <= n; ++k) {
    int s = (*branch_)[k - 1].sign(comps_[k - 1]);
    if (s != 0) return s;
  }
  return 0;
}

std::string ValueVector::render() const {
  std::string out = "(";
  for (int k = 1; k <= depth(); ++k) {
    if (k > 1) out += ",";
    out += render_surd(comps_[k - 1], (*branch_)[k - 1].surd_d());
  }
  return out + ")";
}

std::strong_ordering compare(const ValueVector& x, const ValueVector& y) {
  if (!same_branch(x.branch(), y.branch()))
    throw dimension_error("compare: branch mismatch");
  int s = (x - y).prefix_sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Cut::Cut(BranchRef branch, Kind k)
    : kind_(k), branch_(branch), pivot_(ValueVector::zero(branch)) {}

Cut Cut::zero(BranchRef branch) { return Cut(std::move(branch), Kind::zero); }
Cut Cut::full(BranchRef branch) { return Cut(std::move(branch), Kind::full); }

Cut Cut::closed_at(ValueVector pivot, int level) {
  if (level < 1 || level > pivot.depth())
    throw dimension_error("cut level out of range");
  Cut c(pivot.branch(), Kind::shift);
  c.level_ = level;
  c.closed_ = true;
  c.pivot_ = std::move(pivot);
  c.canonicalize();
  return c;
}

Cut Cut::open_at(ValueVector pivot, int level) {
  if (level < 1 || level > pivot.depth())
    throw dimension_error("cut level out of range");
  Cut c(pivot.branch(), Kind::shift);
  c.level_ = level;
  c.closed_ = false;
  c.pivot_ = std::move(pivot);
  c.canonicalize();
  return c;
}

Cut Cut::unit(BranchRef branch) {
  int n = static_cast<int>(branch->size());
  return closed_at(ValueVector::zero(std::move(branch)), n);
}

void Cut::canonicalize() {
  if (kind_ != Kind::shift) return;
  for (int k = level_ + 1; k <= pivot_.depth(); ++k) pivot_.comp(k) = Surd{};
  const RankOneGroup& g = (*branch_)[level_ - 1];
  if (!closed_ && !g.dense()) {
    // {trunc > p} = {trunc >= p + e_level} when the level group is Z.
    pivot_.comp(level_) = pivot_.comp(level_) + g.min_positive();
    closed_ = true;
  }
}

bool Cut::member(const ValueVector& x) const {
  if (!same_branch(branch_, x.branch()))
    throw dimension_error("cut_member: branch mismatch");
  if (kind_ == Kind::zero) return false;
  if (kind_ == Kind::full) return true;
  int s = (x - pivot_).prefix_sign(level_);
  return closed_ ? s >= 0 : s > 0;
}

Cut Cut::rebase(BranchRef target) const {
  if (kind_ != Kind::shift) {
    Cut c(target, kind_);
    return c;
  }
  if (static_cast<int>(target->size()) < level_)
    throw dimension_error("rebase: target branch shallower than cut level");
  for (int k = 1; k <= level_; ++k)
    if (!((*target)[k - 1] == (*branch_)[k - 1]))
      throw dimension_error("rebase: branch prefix mismatch");
  std::vector<Surd> comps(target->size());
  for (int k = 1; k <= level_; ++k) comps[k - 1] = pivot_.comp(k);
  ValueVector p(target, std::move(comps));
  return closed_ ? closed_at(std::move(p), level_) : open_at(std::move(p), level_);
}

Cut Cut::project(int level) const {
  if (level < 1 || level > static_cast<int>(branch_->size()))
    throw dimension_error("project: level out of range");
  BranchRef sub = make_branch(
      std::vector<RankOneGroup>(branch_->begin(), branch_->begin() + level));
  if (kind_ != Kind::shift) return Cut(sub, kind_);
  if (level_ <= level) return rebase(sub);
  // Deeper cuts project to the closed prefix cut.
  std::vector<Surd> comps(level);
  for (int k = 1; k <= level; ++k) comps[k - 1] = pivot_.comp(k);
  return closed_at(ValueVector(sub, std::move(comps)), level);
}

Cut Cut::shifted(const ValueVector& by) const {
  if (kind_ != Kind::shift) return *this;
  ValueVector p = pivot_ + by;
  return closed_ ? closed_at(std::move(p), level_) : open_at(std::move(p), level_);
}

bool Cut::operator==(const Cut& o) const {
  if (!same_branch(branch_, o.branch_)) return false;
  if (kind_ != o.kind_) return false;
  if (kind_ != Kind::shift) return true;
  return level_ == o.level_ && closed_ == o.closed_ && pivot_ == o.pivot_;
}

std::string Cut::render() const {
  if (kind_ == Kind::zero) return "ZERO";
  if (kind_ == Kind::full) return "FULL";
  std::string out = closed_ ? ">= (" : "> (";
  for (int k = 1; k <= level_; ++k) {
    if (k > 1) out += ",";
    out += render_surd(pivot_.comp(k), (*branch_)[k - 1].surd_d());
  }
  out += ") @" + std::to_string(level_);
  return out;
}

namespace {

enum class CompClass { neg_inf, real, pos_inf };

CompClass comp_class(const Cut& c, int k) {
  if (k <= c.level()) return CompClass::real;
  return c.closed() ? CompClass::neg_inf : CompClass::pos_inf;
}

}  // namespace

std::strong_ordering boundary_order(const Cut& a, const Cut& b) {
  if (!same_branch(a.branch(), b.branch()))
    throw dimension_error("boundary_order: branch mismatch");
  // Sentinels: FULL boundary below everything, ZERO above everything.
  auto rank = [](const Cut& c) { return c.is_full() ? -1 : (c.is_zero() ? 1 : 0); };
  if (rank(a) != rank(b))
    return rank(a) < rank(b) ? std::strong_ordering::less : std::strong_ordering::greater;
  if (!a.is_shift()) return std::strong_ordering::equal;
  int n = static_cast<int>(a.branch()->size());
  for (int k = 1; k <= n; ++k) {
    CompClass ca = comp_class(a, k), cb = comp_class(b, k);
    if (ca != cb) {
      if (ca == CompClass::real) {
        // real vs +-inf
        return cb == CompClass::neg_inf ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
      }
      if (cb == CompClass::real) {
        return ca == CompClass::neg_inf ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
      }
      return ca == CompClass::neg_inf ? std::strong_ordering::less
                                      : std::strong_ordering::greater;
    }
    if (ca == CompClass::real) {
      auto ord = (*a.branch())[k - 1].compare(a.pivot().comp(k), b.pivot().comp(k));
      if (ord != std::strong_ordering::equal) return ord;
    } else {
      return std::strong_ordering::equal;  // identical infinite tails
    }
  }
  return std::strong_ordering::equal;
}

bool subset(const Cut& a, const Cut& b) { return boundary_order(a, b) >= 0; }

namespace {

ValueVector prefix_pivot(const ValueVector& v, int level) {
  std::vector<Surd> c(v.depth());
  for (int k = 1; k <= level; ++k) c[k - 1] = v.comp(k);
  return ValueVector(v.branch(), std::move(c));
}

Cut sum_shift(const Cut& a, const Cut& b) {
  int i = std::min(a.level(), b.level());
  bool closed;
  if (a.level() < b.level())
    closed = a.closed();
  else if (b.level() < a.level())
    closed = b.closed();
  else
    closed = a.closed() && b.closed();
  ValueVector p = prefix_pivot(a.pivot() + b.pivot(), i);
  return closed ? Cut::closed_at(std::move(p), i) : Cut::open_at(std::move(p), i);
}

Cut colon_shift(const Cut& a, const Cut& b) {
  const int i = a.level(), j = b.level();
  if (j >= i) {
    bool closed = (j == i && !b.closed()) ? true : a.closed();
    ValueVector p = prefix_pivot(a.pivot() - b.pivot(), i);
    return closed ? Cut::closed_at(std::move(p), i) : Cut::open_at(std::move(p), i);
  }
  // Divisor at a strictly lower level: the residual flips the flag.
  ValueVector p = prefix_pivot(a.pivot() - b.pivot(), j);
  return b.closed() ? Cut::open_at(std::move(p), j) : Cut::closed_at(std::move(p), j);
}

}  // namespace

Cut cut_lattice(const Cut& a, const Cut& b, CutOp op) {
  if (!same_branch(a.branch(), b.branch()))
    throw dimension_error("cut_lattice: branch mismatch");
  switch (op) {
    case CutOp::meet_set:
      if (a.is_zero() || b.is_zero()) return Cut::zero(a.branch());
      if (a.is_full()) return b;
      if (b.is_full()) return a;
      return boundary_order(a, b) >= 0 ? a : b;
    case CutOp::join_set:
      if (a.is_full() || b.is_full()) return Cut::full(a.branch());
      if (a.is_zero()) return b;
      if (b.is_zero()) return a;
      return boundary_order(a, b) <= 0 ? a : b;
    case CutOp::sum_set:
      if (a.is_zero()) return b;
      if (b.is_zero()) return a;
      if (a.is_full() || b.is_full()) return Cut::full(a.branch());
      return sum_shift(a, b);
    case CutOp::colon_set:
      if (b.is_zero()) return Cut::full(a.branch());
      if (a.is_zero()) return Cut::zero(a.branch());
      if (b.is_full()) return a.is_full() ? Cut::full(a.branch()) : Cut::zero(a.branch());
      if (a.is_full()) return Cut::full(a.branch());
      return colon_shift(a, b);
  }
  throw invariant_error("cut_lattice: unhandled operation");
}

std::vector<ValueVector> probe_points(const Cut& c) {
  std::vector<ValueVector> out;
  ValueVector base = c.is_shift() ? c.pivot() : ValueVector::zero(c.branch());
  out.push_back(base);
  int n = static_cast<int>(c.branch()->size());
  for (int k = 1; k <= n; ++k) {
    const RankOneGroup& g = (*c.branch())[k - 1];
    for (const Surd& s : g.probe_scales(7)) {
      ValueVector up = base;
      up.comp(k) = up.comp(k) + s;
      out.push_back(std::move(up));
      ValueVector down = base;
      down.comp(k) = down.comp(k) - s;
      out.push_back(std::move(down));
    }
  }
  return out;
}

ValueVector separating_vector(const Cut& a_in, const Cut& b_in) {
  if (a_in == b_in) throw invariant_error("separating_vector on equal cuts");
  // Arrange A strictly larger as a set (smaller boundary).
  const bool swap = boundary_order(a_in, b_in) > 0;
  const Cut& A = swap ? b_in : a_in;
  const Cut& B = swap ? a_in : b_in;
  const BranchRef& br = A.branch();
  const int n = static_cast<int>(br->size());

  if (A.is_full() && B.is_zero()) return ValueVector::zero(br);
  if (B.is_zero()) {
    // Any member of A.
    if (A.is_shift()) {
      ValueVector x = A.pivot();
      if (!A.closed()) x.comp(1) = x.comp(1) + Surd{Rational(1), Rational(0)};
      return x;
    }
    return ValueVector::zero(br);
  }
  if (A.is_full()) {
    // Something below B's boundary.
    ValueVector x = B.pivot();
    x.comp(1) = x.comp(1) - Surd{Rational(1), Rational(0)};
    return x;
  }

  // Both genuine cuts, A strictly larger.  Find the first boundary
  // difference position p.
  int p = 0;
  for (int k = 1; k <= n; ++k) {
    CompClass ca = comp_class(A, k), cb = comp_class(B, k);
    if (ca != cb) {
      p = k;
      break;
    }
    if (ca == CompClass::real) {
      if ((*br)[k - 1].compare(A.pivot().comp(k), B.pivot().comp(k)) !=
          std::strong_ordering::equal) {
        p = k;
        break;
      }
    } else {
      break;  // equal infinite tails; cannot happen for unequal cuts
    }
  }
  if (p == 0) throw invariant_error("separating_vector: no boundary difference");

  CompClass ca = comp_class(A, p), cb = comp_class(B, p);
  if (ca == CompClass::real && cb == CompClass::real) {
    // gamma_p < delta_p.  A closed: the pivot of A is below B's boundary.
    if (A.closed()) return A.pivot();
    // A open: step into the gap at position p.
    const RankOneGroup& g = (*br)[p - 1];
    Surd t = g.dense()
                 ? g.between(Surd{}, B.pivot().comp(p) - A.pivot().comp(p))
                 : g.min_positive();
    ValueVector x = A.pivot();
    x.comp(p) = x.comp(p) + t;
    // Canonical open cuts only sit at dense levels, so for discrete groups
    // the min-positive step may land on B's boundary; nudge deeper if so.
    if (B.member(x)) {
      if (p < n)
        x.comp(p + 1) = x.comp(p + 1) - Surd{Rational(1), Rational(0)};
      else
        throw invariant_error("separating_vector: adjacent discrete cuts");
    }
    return x;
  }
  if (ca == CompClass::real) {
    // B's tail is +inf at p (B open, level < p): x = pivot(A)+step at p
    // stays outside B when A is open; pivot(A) works when A closed.
    if (A.closed()) {
      ValueVector x = A.pivot();
      if (!B.member(x)) return x;
      // x on B's side can only mean B closed with equal prefix; descend.
      x.comp(p) = x.comp(p) - Surd{Rational(1), Rational(0)};
      return x;
    }
    ValueVector x = A.pivot();
    x.comp(A.level()) = x.comp(A.level()) + Surd{Rational(1), Rational(0)};
    if (!B.member(x)) return x;
    throw invariant_error("separating_vector: open/real case failed");
  }
  // ca infinite at p (p > level(A)); A closed => -inf tail.
  if (ca == CompClass::neg_inf) {
    ValueVector x = A.pivot();  // zero-extended beyond level(A)
    if (!B.member(x)) return x;
    // Descend below B's boundary at p.
    Surd target = (cb == CompClass::real) ? B.pivot().comp(p) : Surd{};
    x.comp(p) = target - Surd{Rational(1), Rational(0)};
    if (!B.member(x) && A.member(x)) return x;
    throw invariant_error("separating_vector: neg-inf case failed");
  }
  // ca == pos_inf would mean boundary(A) > boundary(B): contradicts setup.
  throw invariant_error("separating_vector: impossible boundary classes");
}

}  // namespace starforge
