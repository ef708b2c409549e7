#include "starforge/group.hpp"

#include <algorithm>
#include <cmath>

#include "starforge/errors.hpp"

namespace starforge {

bool is_squarefree(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

RankOneGroup RankOneGroup::integers() {
  RankOneGroup g;
  g.kind_ = Kind::integers;
  return g;
}

RankOneGroup RankOneGroup::rationals() {
  RankOneGroup g;
  g.kind_ = Kind::rationals;
  return g;
}

RankOneGroup RankOneGroup::n_adic(long n) {
  if (n < 2) throw input_error("Z[1/n] requires n >= 2");
  RankOneGroup g;
  g.kind_ = Kind::n_adic;
  g.n_ = n;
  return g;
}

RankOneGroup RankOneGroup::quadratic(Rational a, Rational b, long d) {
  if (b == 0) throw input_error("quadratic lattice requires b != 0");
  if (d < 2 || !is_squarefree(d))
    throw input_error("quadratic lattice requires squarefree d >= 2");
  RankOneGroup g;
  g.kind_ = Kind::quadratic;
  a.canonicalize();
  b.canonicalize();
  g.a_ = a;
  g.b_ = b;
  g.d_ = d;
  return g;
}

std::string RankOneGroup::name() const {
  switch (kind_) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::n_adic:
      return "Z[1/" + std::to_string(n_) + "]";
    case Kind::quadratic: {
      Surd theta{a_, b_};
      if (a_ == 0 && b_ == 1) return "Z+Z*sqrt(" + std::to_string(d_) + ")";
      return "Z+Z*(" + render_surd(theta, d_) + ")";
    }
  }
  return "?";
}

RankOneGroup RankOneGroup::parse(const std::string& literal) {
  std::string t;
  for (char c : literal)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "Z") return integers();
  if (t == "Q") return rationals();
  if (t.rfind("Z[1/", 0) == 0 && t.back() == ']') {
    long n = std::strtol(t.substr(4, t.size() - 5).c_str(), nullptr, 10);
    return n_adic(n);
  }
  if (t.rfind("Z+Z*", 0) == 0) {
    std::string inner = t.substr(4);
    if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')' &&
        inner.find("sqrt(") != 0)
      inner = inner.substr(1, inner.size() - 2);
    // Probe the radicand first so parse_surd can validate against it.
    auto pos = inner.find("sqrt(");
    if (pos == std::string::npos)
      throw parse_error("quadratic group literal lacks sqrt: '" + literal + "'");
    auto close = inner.find(')', pos);
    if (close == std::string::npos)
      throw parse_error("unbalanced sqrt in '" + literal + "'");
    long d = std::strtol(inner.substr(pos + 5, close - pos - 5).c_str(), nullptr, 10);
    Surd theta = parse_surd(inner, d);
    if (theta.w == 0)
      throw parse_error("quadratic group literal needs b != 0: '" + literal + "'");
    return quadratic(theta.u, theta.w, d);
  }
  throw parse_error("unknown group literal '" + literal + "'");
}

bool RankOneGroup::contains(const Surd& v) const {
  switch (kind_) {
    case Kind::integers:
      return v.w == 0 && v.u.get_den() == 1;
    case Kind::rationals:
      return v.w == 0;
    case Kind::n_adic: {
      if (v.w != 0) return false;
      mpz_class den = v.u.get_den();
      mpz_class g;
      while (true) {
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), mpz_class(n_).get_mpz_t());
        if (g == 1) break;
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
      }
      return den == 1;
    }
    case Kind::quadratic: {
      // v = p*1 + q*(a+b*sqrt(d)) with integers p, q.
      Rational q = v.w / b_;
      if (q.get_den() != 1) return false;
      Rational p = v.u - q * a_;
      return p.get_den() == 1;
    }
  }
  return false;
}

Surd RankOneGroup::min_positive() const {
  if (kind_ != Kind::integers)
    throw invariant_error("min_positive on a dense group");
  return Surd{Rational(1), Rational(0)};
}

std::vector<Surd> RankOneGroup::probe_scales(int count) const {
  std::vector<Surd> out;
  switch (kind_) {
    case Kind::integers:
      out.push_back(Surd{Rational(1), Rational(0)});
      break;
    case Kind::rationals:
    case Kind::n_adic: {
      long base = (kind_ == Kind::rationals) ? 2 : n_;
      Rational s(1);
      for (int k = 0; k < count; ++k) {
        out.push_back(Surd{s, Rational(0)});
        s /= base;
      }
      break;
    }
    case Kind::quadratic: {
      // 1 plus best-approximation residues |k*theta - m|, shrinking.
      out.push_back(Surd{Rational(1), Rational(0)});
      Surd theta{a_, b_};
      Surd best{Rational(1), Rational(0)};
      for (long k = 1; static_cast<int>(out.size()) < count && k <= 4096; ++k) {
        Surd kt{a_ * k, b_ * k};
        // m = nearest integer to k*theta, found by exact bisection on sign.
        double approx = surd_approx(kt, d_);
        long m = std::lround(approx);
        // correct m exactly: want |kt - m| minimal among m-1, m, m+1
        Surd cand{kt.u - m, kt.w};
        for (long mm : {m - 1, m + 1}) {
          Surd c2{kt.u - mm, kt.w};
          Surd abs1 = (surd_sign(cand, d_) < 0) ? -cand : cand;
          Surd abs2 = (surd_sign(c2, d_) < 0) ? -c2 : c2;
          if (surd_compare(abs2, abs1, d_) < 0) cand = c2;
        }
        Surd a = (surd_sign(cand, d_) < 0) ? -cand : cand;
        if (!a.is_zero() && surd_compare(a, best, d_) < 0) {
          best = a;
          out.push_back(a);
        }
      }
      break;
    }
  }
  return out;
}

Surd RankOneGroup::between(const Surd& lo, const Surd& hi) const {
  if (!dense()) throw invariant_error("between() on Z");
  const long d = d_ ? d_ : 2;
  if (surd_compare(lo, hi, d) >= 0)
    throw invariant_error("between(): empty interval");
  Surd gap = hi - lo;
  switch (kind_) {
    case Kind::rationals:
      return Surd{lo.u + gap.u / 2, Rational(0)};
    case Kind::n_adic: {
      // lo + n^-k with n^-k < gap.
      Rational step(1);
      while (cmp(step, gap.u) >= 0) step /= n_;
      return Surd{lo.u + step, Rational(0)};
    }
    case Kind::quadratic: {
      // Find a member 0 < s < gap by a best-approximation sweep, then lo + s.
      Surd one{Rational(1), Rational(0)};
      if (surd_compare(one, gap, d_) < 0) return lo + one;
      for (long k = 1;; ++k) {
        Surd kt{a_ * k, b_ * k};
        double approx = surd_approx(kt, d_);
        long m = std::lround(approx);
        for (long mm : {m - 1, m, m + 1}) {
          Surd c{kt.u - mm, kt.w};
          Surd aps = (surd_sign(c, d_) < 0) ? -c : c;
          if (!aps.is_zero() && surd_compare(aps, gap, d_) < 0) return lo + aps;
        }
        if (k > 1 << 22)
          throw invariant_error("between(): approximation sweep exhausted");
      }
    }
    default:
      break;
  }
  throw invariant_error("between(): unreachable");
}

}  // namespace starforge
