#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace starforge {

using Rational = mpq_class;

// Exact scalar u + w*sqrt(d).  The radicand d is not stored here; it is
// supplied by the owning group on every operation that needs it.  Values
// with w == 0 are plain rationals and compare without any d.
struct Surd {
  Rational u{0};
  Rational w{0};

  bool rational() const { return w == 0; }
  bool is_zero() const { return u == 0 && w == 0; }

  Surd operator+(const Surd& o) const { return {u + o.u, w + o.w}; }
  Surd operator-(const Surd& o) const { return {u - o.u, w - o.w}; }
  Surd operator-() const { return {-u, -w}; }
  bool operator==(const Surd& o) const { return u == o.u && w == o.w; }
};

// Exact sign of u + w*sqrt(d), d >= 2 squarefree.  Never touches floating
// point: mixed-sign cases compare u^2 against d*w^2.
int surd_sign(const Surd& s, long d);

std::strong_ordering surd_compare(const Surd& a, const Surd& b, long d);

// "p", "p/q", "p+q*sqrt(d)" style rendering (canonical, parseable back).
std::string render_rational(const Rational& q);
std::string render_surd(const Surd& s, long d);

// Strict rational parser ("-3/4", "2"); throws parse_error.
Rational parse_rational(const std::string& text);

// Accepts the forms produced by render_surd plus "q*sqrt(d)" and "sqrt(d)".
// d_expected = 0 means a plain rational is required.
Surd parse_surd(const std::string& text, long d_expected);

double surd_approx(const Surd& s, long d);

}  // namespace starforge
