#include "starforge/scalar.hpp"

#include <cmath>
#include <cstdlib>

#include "starforge/errors.hpp"

namespace starforge {

int surd_sign(const Surd& s, long d) {
  const int su = sgn(s.u);
  const int sw = sgn(s.w);
  if (sw == 0) return su;
  if (su == 0) return sw;
  if (su == sw) return su;
  // Mixed signs: |u| vs |w|*sqrt(d), decided by u^2 vs d*w^2.
  Rational lhs = s.u * s.u;
  Rational rhs = s.w * s.w * d;
  const int c = cmp(lhs, rhs);
  if (c == 0)
    throw invariant_error("surd_sign: u^2 == d*w^2 with w != 0 (d not squarefree?)");
  return su * (c > 0 ? 1 : -1);
}

std::strong_ordering surd_compare(const Surd& a, const Surd& b, long d) {
  const int s = surd_sign(a - b, d);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string render_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string render_surd(const Surd& s, long d) {
  if (s.w == 0) return render_rational(s.u);
  std::string root = "sqrt(" + std::to_string(d) + ")";
  std::string wpart;
  if (s.w == 1)
    wpart = root;
  else if (s.w == -1)
    wpart = "-" + root;
  else
    wpart = render_rational(s.w) + "*" + root;
  if (s.u == 0) return wpart;
  if (sgn(s.w) > 0) return render_rational(s.u) + "+" + wpart;
  return render_rational(s.u) + wpart;  // wpart already carries the minus
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw parse_error("bad rational literal '" + text + "'");
  }
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal '" + text + "'");
  }
}

namespace {

// Splits "a+b" / "a-b" at the top-level sign (not the leading one).
bool split_top_sign(const std::string& t, std::string& lhs, std::string& rhs) {
  for (size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '*' && t[i - 1] != '/' &&
        t[i - 1] != '+' && t[i - 1] != '-' && t.find("sqrt", i) != std::string::npos) {
      lhs = t.substr(0, i);
      rhs = (t[i] == '+') ? t.substr(i + 1) : t.substr(i);
      return true;
    }
  }
  return false;
}

// Parses "q*sqrt(d)", "sqrt(d)", "-sqrt(d)"; returns false if no sqrt present.
bool parse_root_term(const std::string& t, Rational& coeff, long& d) {
  auto pos = t.find("sqrt(");
  if (pos == std::string::npos) return false;
  if (t.back() != ')') throw parse_error("bad surd literal '" + t + "'");
  std::string dtxt = t.substr(pos + 5, t.size() - pos - 6);
  d = std::strtol(dtxt.c_str(), nullptr, 10);
  if (d < 2) throw parse_error("bad radicand in '" + t + "'");
  std::string pre = t.substr(0, pos);
  if (pre.empty() || pre == "+")
    coeff = 1;
  else if (pre == "-")
    coeff = -1;
  else {
    if (pre.back() != '*') throw parse_error("bad surd literal '" + t + "'");
    coeff = parse_rational(pre.substr(0, pre.size() - 1));
  }
  return true;
}

}  // namespace

Surd parse_surd(const std::string& text, long d_expected) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw parse_error("empty scalar literal");

  Surd out;
  std::string lhs, rhs;
  long d = 0;
  Rational coeff;
  if (split_top_sign(t, lhs, rhs)) {
    out.u = parse_rational(lhs);
    if (!parse_root_term(rhs, coeff, d))
      throw parse_error("expected sqrt term in '" + text + "'");
    out.w = coeff;
  } else if (parse_root_term(t, coeff, d)) {
    out.w = coeff;
  } else {
    out.u = parse_rational(t);
  }
  if (out.w != 0) {
    if (d_expected == 0)
      throw parse_error("surd component not allowed here: '" + text + "'");
    if (d != d_expected)
      throw parse_error("radicand mismatch in '" + text + "'");
  }
  return out;
}

double surd_approx(const Surd& s, long d) {
  return s.u.get_d() + s.w.get_d() * std::sqrt(static_cast<double>(d));
}

}  // namespace starforge
