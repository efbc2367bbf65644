#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "inireg/polynomial.hpp"
#include "inireg/ring.hpp"

namespace inireg {

/// Syntax error with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses the shared polynomial grammar: identifiers as variables, `*` for
/// multiplication (juxtaposition not allowed), `^` for integer powers, `+`/`-`,
/// integer or `p/q` rational coefficients. Example: `x1*x2*x3 + 2*x3*x4^2`.
///
/// `line` and `column` locate `text` inside a larger source for error messages.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, int line = 1,
                            int column = 1);

}  // namespace inireg
