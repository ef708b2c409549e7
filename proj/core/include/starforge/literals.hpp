#pragma once

#include <string>

#include "starforge/star.hpp"

namespace starforge {

// Per-leaf text form: "M1: >= (0,1/2) @2; M2: > (1) @1".  "R" denotes the
// unit ideal; omitted leaves default to the unit cut; "FULL" marks a
// swallowed tree.
std::string render_ideal_literal(const IdealFamily& a);
IdealFamily parse_ideal_literal(const ForestRef& f, const std::string& text);

// Expression grammar: d | v | spec(P1,P2) | meet(e1,e2) |
// branches{b1:e1,...} | transport(Q,e) | extend(e,T).
StarExpr parse_star_literal(const ForestRef& f, const std::string& text);

}  // namespace starforge
