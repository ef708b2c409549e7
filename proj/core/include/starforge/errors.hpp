#pragma once

#include <stdexcept>
#include <string>

namespace starforge {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Values from different branches / forests mixed in one operation.
struct dimension_error : error {
  explicit dimension_error(const std::string& what) : error(what) {}
};

// An identifier (prime, branch, leaf) does not belong to the forest in scope.
struct scope_error : error {
  explicit scope_error(const std::string& what) : error(what) {}
};

// Malformed input text; line/col are 1-based, 0 when unknown.
struct parse_error : error {
  parse_error(const std::string& what, int line_ = 0, int col_ = 0)
      : error(what), line(line_), col(col_) {}
  int line;
  int col;
};

// A structural precondition on user-supplied data failed (CLI exit 2).
struct input_error : error {
  explicit input_error(const std::string& what) : error(what) {}
};

// Internal consistency breach: the cut algebra left its closed family,
// a result family lost prefix compatibility, or a dichotomy that the
// theory guarantees did not hold.  Always a bug signal (CLI exit 3).
struct invariant_error : error {
  explicit invariant_error(const std::string& what) : error(what) {}
};

}  // namespace starforge
