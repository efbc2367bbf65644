#include <doctest.h>

#include <random>

#include "inireg/poly_parser.hpp"
#include "inireg/polynomial.hpp"
#include "inireg/term_order.hpp"
#include "test_util.hpp"

using namespace inireg;
using testutil::M;
using testutil::P;

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(Ring({}), std::invalid_argument);
  CHECK_THROWS_AS(Ring({"a", "a"}), std::invalid_argument);
  Ring r({"a", "b"});
  CHECK(r.size() == 2);
  CHECK(r.index_of("b") == 1);
  CHECK(!r.index_of("c"));
}

TEST_CASE("monomial comparisons on named examples") {
  // grevlex with priority x1 > x2 > x5 > x4 > x3
  Ring r5 = testutil::numbered_ring(5);
  TermOrder grevlex_perm = TermOrder::with_top(OrderKind::GrevLex, 5, {0, 1, 4, 3, 2});
  CHECK(compare_monomials(grevlex_perm, M(r5, "x1*x2*x3"), M(r5, "x3*x4")) == Ordering::GT);

  Ring rxy = testutil::ring_of({"x", "y"});
  TermOrder lex = TermOrder::lex(2);
  CHECK(compare_monomials(lex, M(rxy, "x^2"), M(rxy, "x*y")) == Ordering::GT);

  Ring r4 = testutil::numbered_ring(4);
  TermOrder grevlex4 = TermOrder::grevlex(4);
  CHECK(compare_monomials(grevlex4, M(r4, "x2*x3"), M(r4, "x1*x4")) == Ordering::GT);

  CHECK(compare_monomials(grevlex4, M(r4, "x1"), M(r4, "x1")) == Ordering::EQ);
  CHECK_THROWS_AS(compare_monomials(grevlex4, M(r5, "x1"), M(r5, "x1")), std::invalid_argument);
}

TEST_CASE("term orders are total, multiplicative, with 1 smallest") {
  std::mt19937_64 rng(20240811);
  for (OrderKind kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
    TermOrder order(kind, {2, 0, 1, 3});
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a = testutil::random_monomial(rng, 4, 3);
      Monomial b = testutil::random_monomial(rng, 4, 3);
      Monomial c = testutil::random_monomial(rng, 4, 3);
      Ordering ab = compare_monomials(order, a, b);
      Ordering ba = compare_monomials(order, b, a);
      // exactly one of LT/EQ/GT, antisymmetric
      CHECK((ab == Ordering::EQ) == (a == b));
      if (ab == Ordering::LT) CHECK(ba == Ordering::GT);
      if (ab == Ordering::GT) CHECK(ba == Ordering::LT);
      // multiplicative
      if (ab == Ordering::LT) CHECK(compare_monomials(order, a * c, b * c) == Ordering::LT);
      // 1 is smallest
      Monomial one = Monomial::one(4);
      if (!a.is_one()) CHECK(compare_monomials(order, one, a) == Ordering::LT);
      // graded kinds agree with degree whenever degrees differ
      if (kind != OrderKind::Lex && a.total_degree() != b.total_degree()) {
        CHECK((ab == Ordering::GT) == (a.total_degree() > b.total_degree()));
      }
    }
  }
}

TEST_CASE("leading terms") {
  Ring r5 = testutil::numbered_ring(5);
  TermOrder order = TermOrder::with_top(OrderKind::GrevLex, 5, {0, 1, 4, 3, 2});
  Polynomial f = P(r5, "x2*x5 + x1*x2*x4");
  CHECK(f.leading_term(order).monomial == M(r5, "x1*x2*x4"));

  Ring rb = testutil::ring_of({"b0", "b1"});
  Polynomial g = P(rb, "b0 + b1");
  CHECK(g.leading_term(TermOrder::lex(2)).monomial == M(rb, "b0"));

  Polynomial c = P(rb, "5");
  Term lt = c.leading_term(TermOrder::lex(2));
  CHECK(lt.coefficient == 5);
  CHECK(lt.monomial.is_one());

  CHECK_THROWS_AS(Polynomial::zero(2).leading_term(TermOrder::lex(2)), std::invalid_argument);
}

TEST_CASE("arithmetic keeps polynomials canonical") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = testutil::random_polynomial(rng, 3, 6, 3);
    Polynomial g = testutil::random_polynomial(rng, 3, 6, 3);
    CHECK((f + g) - g == f);
    CHECK(f * g == g * f);
    Polynomial product = f * g;
    for (const auto& [m, c] : product.terms()) CHECK(c != 0);
    Polynomial sum = f + (-f);
    CHECK(sum.is_zero());
  }
  Ring r = testutil::ring_of({"x", "y"});
  TermOrder lex = TermOrder::lex(2);
  Polynomial f = P(r, "2*x^2 + 4*y");
  CHECK(f.monic(lex) == P(r, "x^2 + 2*y"));
  CHECK(f.monic(lex).monic(lex) == f.monic(lex));
}

TEST_CASE("polynomial text grammar") {
  Ring r = testutil::ring_of({"x", "y", "z"});
  CHECK(P(r, "x^2*y - 1/2*z") == P(r, "x*x*y - z*1/2"));
  CHECK(P(r, "-x + x").is_zero());
  CHECK(P(r, "3/6*x") == P(r, "1/2*x"));

  // juxtaposition is not multiplication
  CHECK_THROWS_AS(P(r, "x y"), ParseError);
  CHECK_THROWS_AS(P(r, "x + "), ParseError);
  CHECK_THROWS_AS(P(r, "w"), ParseError);
  CHECK_THROWS_AS(P(r, "x^"), ParseError);
  CHECK_THROWS_AS(P(r, "1/0"), ParseError);

  try {
    parse_polynomial("x1 + q", testutil::numbered_ring(3), 7, 1);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 6);
  }

  // print respects the order, parse accepts any order
  Ring r5 = testutil::numbered_ring(5);
  TermOrder order = TermOrder::with_top(OrderKind::GrevLex, 5, {0, 1, 4, 3, 2});
  Polynomial f = P(r5, "x3*x4 + x1*x2*x3");
  CHECK(f.to_string(r5, order) == "x1*x2*x3 + x3*x4");
  CHECK(P(r5, f.to_string(r5, order)) == f);
}

TEST_CASE("order schedule replicates a single order") {
  OrderSchedule schedule({TermOrder::lex(3)});
  CHECK(schedule.at_step(1) == TermOrder::lex(3));
  CHECK(schedule.at_step(5) == TermOrder::lex(3));
  CHECK_THROWS_AS(schedule.at_step(0), std::out_of_range);
  CHECK_THROWS_AS(OrderSchedule({}), std::invalid_argument);
}

TEST_CASE("priority permutations are validated") {
  CHECK_THROWS_AS(TermOrder(OrderKind::Lex, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(TermOrder::with_top(OrderKind::Lex, 3, {1, 1}), std::invalid_argument);
  TermOrder t = TermOrder::with_top(OrderKind::Lex, 4, {2});
  CHECK(t.priority() == std::vector<int>{2, 0, 1, 3});
}
