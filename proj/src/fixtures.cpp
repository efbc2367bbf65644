#include "inireg/fixtures.hpp"

namespace inireg {

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"intro",
       "three-generator ideal in five variables whose initial ideal certifies depth 2",
       "ring: x1 x2 x3 x4 x5\n"
       "order: grevlex x1 > x2 > x5 > x4 > x3\n"
       "ideal:\n"
       "  x1*x2*x3 + x3*x4\n"
       "  x2*x5 + x1*x2*x4\n"
       "  x3*x5\n"
       "steps:\n"
       "  form: x1 + x2\n"
       "  form: x5 + x3\n"},
      {"extended-pentagon",
       "pentagon with two whiskers after passing to the initial ideal; depth 3",
       "ring: x1 x2 x3 x4 x5 x6 x7 x8\n"
       "order: grevlex x1 > x2 > x3 > x4 > x5 > x6 > x7 > x8\n"
       "ideal:\n"
       "  x1*x2 + x1*x3\n"
       "  x2*x3 + x3^2\n"
       "  x3*x4\n"
       "  x4*x5\n"
       "  x5*x1\n"
       "  x1*x6\n"
       "  x5*x7\n"
       "  x7*x8\n"},
      {"higher-power",
       "hypergraph with vertex weights 2 on a and c; depth 2",
       "ring: a b c d\n"
       "ideal:\n"
       "  a^2*b\n"
       "  a*b*c*d\n"
       "  c^2*d\n"},
      {"better-than-epsilon",
       "seven-vertex graph where star packing certifies the full depth 3",
       "ring: x1 x2 x3 x4 x5 x6 x7\n"
       "ideal:\n"
       "  x1*x2\n"
       "  x2*x3\n"
       "  x1*x3\n"
       "  x2*x4\n"
       "  x4*x5\n"
       "  x3*x6\n"
       "  x6*x7\n"},
      {"hypergraph-10",
       "ten-vertex hypergraph where chains push the bound from 4 to the true depth 6",
       "ring: x1 x2 x3 x4 x5 x6 x7 x8 x9 x10\n"
       "ideal:\n"
       "  x1*x2*x3\n"
       "  x2*x3*x4\n"
       "  x2*x5*x6\n"
       "  x3*x7*x8\n"
       "  x4*x9*x10\n"},
      {"h-tree",
       "H-shaped tree whose leaf pair c, f completes the sequence; depth 3",
       "ring: a b c d e f\n"
       "ideal:\n"
       "  a*b\n"
       "  b*c\n"
       "  b*e\n"
       "  d*e\n"
       "  e*f\n"},
      {"pair-leaves",
       "graph with two leaf pairs and one long star; depth 3",
       "ring: a b c d e f g\n"
       "ideal:\n"
       "  a*b\n"
       "  a*e\n"
       "  b*c\n"
       "  b*e\n"
       "  d*e\n"
       "  e*f\n"
       "  b*g\n"},
      {"leaf-distance",
       "spider graph whose four leaves admit no valid leaf pair",
       "ring: x1 x2 x3 x4 x5 x6 x7\n"
       "ideal:\n"
       "  x1*x2\n"
       "  x2*x3\n"
       "  x2*x4\n"
       "  x4*x5\n"
       "  x5*x6\n"
       "  x5*x7\n"},
      {"tetrahedron",
       "single quartic generator abcd; the chain a+b, b+c, c+d certifies depth 3",
       "ring: a b c d\n"
       "ideal:\n"
       "  a*b*c*d\n"},
      {"octagon",
       "eight-cycle edge ideal; automation certifies 2, the supplied steps verify 3",
       "ring: x1 x2 x3 x4 x5 x6 x7 x8\n"
       "ideal:\n"
       "  x1*x2\n"
       "  x2*x3\n"
       "  x3*x4\n"
       "  x4*x5\n"
       "  x5*x6\n"
       "  x6*x7\n"
       "  x7*x8\n"
       "  x1*x8\n"
       "steps:\n"
       "  form(order: grevlex x7 > x2 > x1 > x3 > x5 > x6 > x4 > x8): x2 + x1 + x3\n"
       "  form(order: grevlex x7 > x2 > x1 > x3 > x5 > x6 > x4 > x8): x5 + x6 + x4\n"
       "  form(order: grevlex x7 > x2 > x1 > x3 > x5 > x6 > x4 > x8): x7 + x8 + x6 + x1\n"},
      {"hypergraph-example",
       "mixed hypergraph where a chain through f, h, g, e plus a, c, b, d reaches depth 5",
       "ring: a b c d e f g h\n"
       "ideal:\n"
       "  a*b*c\n"
       "  a*c*d\n"
       "  b*c*d\n"
       "  d*e\n"
       "  e*f*g*h\n"},
      {"path-squared",
       "square of the path ideal (ab, bc); polarization transfers the bound",
       "ring: a b c\n"
       "ideal:\n"
       "  a^2*b^2\n"
       "  a*b^2*c\n"
       "  b^2*c^2\n"},
      {"oriented-graph",
       "weighted oriented-graph edge ideal with two polarizing variables; depth 2",
       "ring: x1 x2 x3 y1 y2 y3\n"
       "ideal:\n"
       "  x1*y1\n"
       "  x1^2*x2\n"
       "  x2^2*y2\n"
       "  x2^2*x3\n"
       "  x3*y3\n"
       "  x1*x3\n"},
      {"binomial-edge-path3",
       "binomial edge ideal of the 3-path; two free variables join three sums",
       "ring: x1 x2 x3 x4 y1 y2 y3 y4\n"
       "order: lex x1 > x2 > x3 > x4 > y1 > y2 > y3 > y4\n"
       "ideal:\n"
       "  x1*y2 - x2*y1\n"
       "  x2*y3 - x3*y2\n"
       "  x3*y4 - x4*y3\n"},
      {"rees-fiber",
       "fiber-cone ideal of a two-walk graph; four free variables plus a chain give 7",
       "ring: T1 T2 T3 T4 T5 T6 T7 T8 T9\n"
       "order: lex T1 > T2 > T3 > T4 > T5 > T6 > T7 > T8 > T9\n"
       "ideal:\n"
       "  T1*T4*T5 - T2*T3*T6\n"
       "  T6*T8 - T7*T9\n"},
  };
  return all;
}

const Fixture* find_fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace inireg
