#pragma once

#include <string>
#include <vector>

#include "inireg/groebner.hpp"
#include "inireg/poly_parser.hpp"
#include "inireg/polynomial.hpp"
#include "inireg/ring.hpp"
#include "inireg/term_order.hpp"

namespace inireg {

/// A parsed problem file:
///
///   # comment
///   ring: x1 x2 x3
///   order: grevlex x1 > x3 > x2
///   ideal:
///     x1*x2 + x2*x3
///     x1*x3
///   steps:
///     form(order: lex x1 > x2 > x3): x1 + x2
///
/// The order line is optional (grevlex in declaration order by default) and
/// its priority chain may mention each variable at most once; unmentioned
/// variables are appended in declaration order. Steps inherit the problem
/// order when written as `form: ...`.
struct ProblemFile {
  struct Step {
    TermOrder order;
    Polynomial form;
    bool operator==(const Step&) const = default;
  };

  Ring ring;
  TermOrder order;
  std::vector<Polynomial> generators;
  std::vector<Step> steps;

  bool operator==(const ProblemFile&) const = default;

  PolyIdeal ideal() const { return PolyIdeal(ring, generators); }
};

ProblemFile parse_problem(const std::string& text);

/// Canonical rendering; parse(print(p)) == p.
std::string print_problem(const ProblemFile& problem);

/// Parses an order specification such as "grevlex x1 > x2" against a ring.
TermOrder parse_order_spec(const std::string& text, const Ring& ring, int line = 1,
                           int column = 1);

}  // namespace inireg
