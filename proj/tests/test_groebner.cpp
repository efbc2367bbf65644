#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "inireg/depth_oracle.hpp"
#include "inireg/groebner.hpp"
#include "test_util.hpp"

using namespace inireg;
using testutil::M;
using testutil::P;

namespace {

bool same_ideal(const PolyIdeal& a, const PolyIdeal& b, const TermOrder& order) {
  // reduced bases are unique per (ideal, order)
  return reduced_groebner_basis(a, order).elements == reduced_groebner_basis(b, order).elements;
}

std::vector<Monomial> leading_monomials_of(const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  for (const auto& g : gb.elements) lts.push_back(g.leading_monomial(gb.order));
  std::sort(lts.begin(), lts.end());
  return lts;
}

// Test-side independent oracle: dimension over Q of I meet R_{<=d}, by exact
// integer ranks of the multiplication rows m*g with deg(m*g) <= d + slack.
long long ideal_dimension_up_to(const PolyIdeal& ideal, int d, int slack) {
  const int n = ideal.ring.size();
  std::vector<Monomial> columns;
  {
    std::vector<int> exps(n, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
      if (var == n) {
        columns.push_back(Monomial::from_exponents(exps));
        return;
      }
      for (int e = 0; e <= left; ++e) {
        exps[var] = e;
        rec(var + 1, left - e);
      }
      exps[var] = 0;
    };
    rec(0, d + slack);
  }
  // columns of degree > d go last, so the high block is a suffix
  std::stable_sort(columns.begin(), columns.end(), [&](const Monomial& a, const Monomial& b) {
    return (a.total_degree() <= d) > (b.total_degree() <= d);
  });
  std::map<Monomial, int> column_index;
  int low_columns = 0;
  for (size_t i = 0; i < columns.size(); ++i) {
    column_index[columns[i]] = static_cast<int>(i);
    if (columns[i].total_degree() <= d) ++low_columns;
  }

  std::vector<std::vector<long long>> rows;
  for (const auto& g : ideal.generators) {
    Integer denom = 1;
    for (const auto& [m, c] : g.terms()) denom = lcm(denom, denominator(c));
    for (const auto& mono : columns) {
      if (mono.total_degree() + g.degree() > d + slack) continue;
      std::vector<long long> row(columns.size(), 0);
      for (const auto& [m, c] : g.terms()) {
        Integer entry = numerator(c) * (denom / denominator(c));
        REQUIRE(abs(entry) < 1000000);
        row[column_index.at(m * mono)] = entry.convert_to<long long>();
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return 0;
  int full_rank = integer_matrix_rank(rows);
  std::vector<std::vector<long long>> high(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    high[i].assign(rows[i].begin() + low_columns, rows[i].end());
  int high_rank = integer_matrix_rank(high);
  return full_rank - high_rank;
}

}  // namespace

TEST_CASE("s-polynomials") {
  Ring r = testutil::ring_of({"x", "b0", "b1"});
  TermOrder lex = TermOrder::lex(3);

  // against a two-variable form the s-polynomial is again a monomial
  Polynomial m = P(r, "x^2*b0^2");
  Polynomial f1 = P(r, "b0 + b1");
  CHECK(s_polynomial(m, f1, lex) == P(r, "-x^2*b0*b1"));

  CHECK(s_polynomial(P(r, "x*b0"), P(r, "b0*b1"), lex).is_zero());

  Ring r4 = testutil::ring_of({"x1", "x2", "y1", "y2"});
  TermOrder lex4 = TermOrder::lex(4);
  std::vector<Polynomial> pairs = {P(r4, "x1 + y1"), P(r4, "x2 + y2")};
  Polynomial s = s_polynomial(pairs[0], pairs[1], lex4);
  CHECK(normal_form(s, pairs, lex4).is_zero());

  CHECK_THROWS_AS(s_polynomial(Polynomial::zero(3), f1, lex), std::invalid_argument);
}

TEST_CASE("normal form") {
  Ring r = testutil::ring_of({"x", "b0", "b1"});
  TermOrder lex = TermOrder::lex(3);

  // dividing x*b0^3 by b0+b1 until the result is free of b0
  Polynomial m = P(r, "x*b0^3");
  std::vector<Polynomial> basis = {P(r, "b0 + b1")};
  CHECK(normal_form(m, basis, lex) == P(r, "-x*b1^3"));

  std::vector<Polynomial> self = {P(r, "x^2*b1 + b0")};
  CHECK(normal_form(self[0], self, lex).is_zero());

  Ring rxy = testutil::ring_of({"x", "y"});
  TermOrder lex2 = TermOrder::lex(2);
  std::vector<Polynomial> div = {P(rxy, "x*y - 1")};
  CHECK(normal_form(P(rxy, "x^2*y + y"), div, lex2) == P(rxy, "x + y"));

  CHECK(normal_form(Polynomial::zero(2), div, lex2).is_zero());
}

TEST_CASE("reduced Groebner bases") {
  Ring r5 = testutil::numbered_ring(5);
  TermOrder order = TermOrder::with_top(OrderKind::GrevLex, 5, {0, 1, 4, 3, 2});
  PolyIdeal intro(r5, {P(r5, "x1*x2*x3 + x3*x4"), P(r5, "x2*x5 + x1*x2*x4"), P(r5, "x3*x5")});
  GroebnerBasis gb = reduced_groebner_basis(intro, order);
  CHECK(gb.reduced);
  std::vector<Monomial> expected = {M(r5, "x3*x5"), M(r5, "x3*x4^2"), M(r5, "x1*x2*x4"),
                                    M(r5, "x1*x2*x3")};
  std::sort(expected.begin(), expected.end());
  CHECK(leading_monomials_of(gb) == expected);

  SUBCASE("monomial input returns its minimal generators") {
    PolyIdeal mono(r5, {P(r5, "x1*x2"), P(r5, "x1*x2*x3"), P(r5, "x4*x5")});
    GroebnerBasis mgb = reduced_groebner_basis(mono, order);
    CHECK(mgb.elements.size() == 2);
    CHECK(initial_ideal(mgb, r5) == testutil::MI(r5, {"x1*x2", "x4*x5"}));
  }

  SUBCASE("binomial edge ideal of the 3-path") {
    Ring r8 = Ring({"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"});
    TermOrder lex8 = TermOrder::lex(8);
    PolyIdeal j(r8, {P(r8, "x1*y2 - x2*y1"), P(r8, "x2*y3 - x3*y2"), P(r8, "x3*y4 - x4*y3")});
    CHECK(initial_ideal(j, lex8) == testutil::MI(r8, {"x1*y2", "x2*y3", "x3*y4"}));
  }

  SUBCASE("uniqueness across generator permutations and Buchberger criterion") {
    std::mt19937_64 rng(99);
    Ring r3 = testutil::ring_of({"x", "y", "z"});
    TermOrder g3 = TermOrder::grevlex(3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) {
        Polynomial f = testutil::random_polynomial(rng, 3, 3, 2);
        if (!f.is_zero()) gens.push_back(f);
      }
      if (gens.empty()) continue;
      PolyIdeal ideal(r3, gens);
      GroebnerBasis a = reduced_groebner_basis(ideal, g3);
      std::shuffle(gens.begin(), gens.end(), rng);
      GroebnerBasis b = reduced_groebner_basis(PolyIdeal(r3, gens), g3);
      CHECK(a.elements == b.elements);
      if (a.is_unit()) continue;
      for (size_t i = 0; i < a.elements.size(); ++i)
        for (size_t j = i + 1; j < a.elements.size(); ++j) {
          Polynomial s = s_polynomial(a.elements[i], a.elements[j], g3);
          CHECK(normal_form(s, a.elements, g3).is_zero());
        }
    }
  }

  SUBCASE("unit ideal is a flagged outcome") {
    Ring r1 = testutil::ring_of({"x"});
    PolyIdeal improper(r1, {P(r1, "x"), P(r1, "x + 1")});
    GroebnerBasis unit = reduced_groebner_basis(improper, TermOrder::lex(1));
    CHECK(unit.is_unit());
    CHECK(unit.elements == std::vector<Polynomial>{P(r1, "1")});
    CHECK_THROWS_AS(initial_ideal(improper, TermOrder::lex(1)), UnitIdealError);
  }
}

TEST_CASE("initial ideals") {
  Ring r8 = testutil::numbered_ring(8);
  TermOrder g8 = TermOrder::grevlex(8);
  PolyIdeal pentagon(r8, {P(r8, "x1*x2 + x1*x3"), P(r8, "x2*x3 + x3^2"), P(r8, "x3*x4"),
                          P(r8, "x4*x5"), P(r8, "x5*x1"), P(r8, "x1*x6"), P(r8, "x5*x7"),
                          P(r8, "x7*x8")});
  CHECK(initial_ideal(pentagon, g8) ==
        testutil::MI(r8, {"x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5", "x1*x6", "x5*x7",
                          "x7*x8"}));

  // a monomial ideal is its own initial ideal
  PolyIdeal mono(r8, {P(r8, "x1*x2"), P(r8, "x3^2")});
  CHECK(initial_ideal(mono, g8) == testutil::MI(r8, {"x1*x2", "x3^2"}));

  Ring rT = testutil::numbered_ring(9, "T");
  TermOrder lexT = TermOrder::lex(9);
  PolyIdeal rees(rT, {P(rT, "T1*T4*T5 - T2*T3*T6"), P(rT, "T6*T8 - T7*T9")});
  CHECK(initial_ideal(rees, lexT) == testutil::MI(rT, {"T1*T4*T5", "T6*T8"}));
}

TEST_CASE("ideal quotients") {
  Ring r3 = testutil::ring_of({"x", "y", "z"});
  TermOrder g3 = TermOrder::grevlex(3);
  PolyIdeal i1(r3, {P(r3, "x*y"), P(r3, "y*z")});
  PolyIdeal q1 = ideal_quotient(i1, P(r3, "y"), g3);
  CHECK(same_ideal(q1, PolyIdeal(r3, {P(r3, "x"), P(r3, "z")}), g3));

  SUBCASE("quotient by a sum of variables, against brute-force membership") {
    Ring r4 = testutil::ring_of({"a", "b", "c", "d"});
    TermOrder g4 = TermOrder::grevlex(4);
    MonomialIdeal tetra = testutil::MI(r4, {"a*b*c*d"});
    PolyIdeal ideal = PolyIdeal::from_monomial_ideal(tetra);
    Polynomial f = P(r4, "a + b");
    PolyIdeal q = ideal_quotient(ideal, f, g4);
    CHECK(same_ideal(q, ideal, g4));

    // brute force: m*(a+b) lies in the monomial ideal iff both m*a and m*b do
    GroebnerBasis qgb = reduced_groebner_basis(q, g4);
    std::vector<int> exps(4, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
      if (var == 4) {
        Monomial m = Monomial::from_exponents(exps);
        bool product_in = tetra.contains(m * M(r4, "a")) && tetra.contains(m * M(r4, "b"));
        bool in_quotient = normal_form(Polynomial::from_monomial(m), qgb.elements, g4).is_zero();
        CHECK(product_in == in_quotient);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        exps[var] = e;
        rec(var + 1, left - e);
      }
      exps[var] = 0;
    };
    rec(0, 6);
  }

  SUBCASE("octagon: the leftover sums are genuine zerodivisors") {
    Ring r8 = testutil::numbered_ring(8);
    TermOrder g8 = TermOrder::grevlex(8);
    std::vector<Polynomial> gens = {P(r8, "x1*x2"), P(r8, "x2*x3"), P(r8, "x3*x4"),
                                    P(r8, "x4*x5"), P(r8, "x5*x6"), P(r8, "x6*x7"),
                                    P(r8, "x7*x8"), P(r8, "x1*x8"), P(r8, "x2 + x1 + x3"),
                                    P(r8, "x5 + x6 + x4")};
    PolyIdeal j(r8, gens);
    PolyIdeal q = ideal_quotient(j, P(r8, "x7 + x8 + x6"), g8);
    CHECK(!same_ideal(q, j, g8));
    CHECK(!is_regular_element(j, P(r8, "x7 + x8 + x6"), g8));
    CHECK(!is_regular_element(j, P(r8, "x8 + x7 + x1"), g8));
    CHECK(is_regular_element(j, P(r8, "x7 + x8 + x6 + x1"), g8));
  }

  CHECK_THROWS_AS(ideal_quotient(i1, Polynomial::zero(3), g3), std::invalid_argument);
}

TEST_CASE("regular elements") {
  Ring r2 = testutil::ring_of({"x", "y"});
  TermOrder g2 = TermOrder::grevlex(2);
  PolyIdeal xy(r2, {P(r2, "x*y")});
  CHECK(!is_regular_element(xy, P(r2, "x"), g2));

  Ring r8 = testutil::numbered_ring(8);
  TermOrder g8 = TermOrder::grevlex(8);
  PolyIdeal pentagon_ini(r8, {P(r8, "x1*x2"), P(r8, "x2*x3"), P(r8, "x3*x4"), P(r8, "x4*x5"),
                              P(r8, "x1*x5"), P(r8, "x1*x6"), P(r8, "x5*x7"), P(r8, "x7*x8")});
  CHECK(is_regular_element(pentagon_ini, P(r8, "x6 + x1"), g8));

  Ring r4 = testutil::ring_of({"a", "b", "c", "d"});
  TermOrder g4 = TermOrder::grevlex(4);
  PolyIdeal tetra(r4, {P(r4, "a*b*c*d")});
  CHECK(is_regular_element(tetra, P(r4, "a + b"), g4));

  SUBCASE("errors") {
    CHECK_THROWS_AS(is_regular_element(xy, P(r2, "x*y"), g2), std::invalid_argument);
    CHECK_THROWS_AS(is_regular_element(xy, P(r2, "3"), g2), std::invalid_argument);
    Ring r1 = testutil::ring_of({"x"});
    PolyIdeal unit(r1, {P(r1, "x"), P(r1, "x + 1")});
    CHECK_THROWS_AS(is_regular_element(unit, P(r1, "x"), TermOrder::lex(1)), UnitIdealError);
  }

  SUBCASE("regularity does not depend on the order used") {
    std::mt19937_64 rng(2024);
    Ring r5 = testutil::numbered_ring(5);
    TermOrder a = TermOrder::grevlex(5);
    TermOrder b = TermOrder::with_top(OrderKind::Lex, 5, {3, 1, 4, 0, 2});
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 25; ++trial) {
      MonomialIdeal ideal = testutil::random_monomial_ideal(rng, r5, 4, 3, 2);
      PolyIdeal pideal = PolyIdeal::from_monomial_ideal(ideal);
      Polynomial f = testutil::random_polynomial(rng, 5, 3, 1);
      if (f.is_zero() || f.is_constant()) continue;
      bool in_a;
      try {
        in_a = is_regular_element(pideal, f, a);
      } catch (const std::invalid_argument&) {
        continue;  // f lies in the ideal
      }
      CHECK(in_a == is_regular_element(pideal, f, b));
      ++checked;
    }
    CHECK(checked >= 10);
  }
}

TEST_CASE("standard monomial counts") {
  Ring r1 = testutil::ring_of({"x"});
  PolyIdeal x2(r1, {P(r1, "x^2")});
  CHECK(standard_monomial_counts(x2, TermOrder::lex(1), 5) ==
        std::vector<long long>{1, 1, 0, 0, 0, 0});

  SUBCASE("single quartic generator against direct enumeration") {
    Ring r4 = testutil::ring_of({"a", "b", "c", "d"});
    PolyIdeal tetra(r4, {P(r4, "a*b*c*d")});
    auto counts = standard_monomial_counts(tetra, TermOrder::grevlex(4), 8);
    auto choose3 = [](long long k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; };
    for (int d = 0; d <= 8; ++d) {
      long long all = choose3(d + 3);
      long long inside = d >= 4 ? choose3(d - 1) : 0;
      CHECK(counts[d] == all - inside);
    }
  }

  SUBCASE("intro example satisfies the Macaulay cross-check") {
    Ring r5 = testutil::numbered_ring(5);
    TermOrder order = TermOrder::with_top(OrderKind::GrevLex, 5, {0, 1, 4, 3, 2});
    PolyIdeal intro(r5, {P(r5, "x1*x2*x3 + x3*x4"), P(r5, "x2*x5 + x1*x2*x4"), P(r5, "x3*x5")});
    auto counts = standard_monomial_counts(intro, order, 6);
    PolyIdeal ini = PolyIdeal::from_monomial_ideal(initial_ideal(intro, order));
    CHECK(counts == standard_monomial_counts(ini, order, 6));

    // independent oracle: exact ranks of the multiplication rows, stable
    // under extra degree slack
    for (int d = 0; d <= 4; ++d) {
      long long dim1 = ideal_dimension_up_to(intro, d, 1);
      long long dim2 = ideal_dimension_up_to(intro, d, 2);
      CHECK(dim1 == dim2);
      long long total = 1;  // monomials of degree <= d in 5 variables: C(d+5,5)
      for (int i = 1; i <= 5; ++i) total = total * (d + i) / i;
      long long standard = 0;
      for (int k = 0; k <= d; ++k) standard += counts[k];
      CHECK(standard == total - dim1);
    }
  }

  SUBCASE("Macaulay agreement on random ideals") {
    std::mt19937_64 rng(31337);
    Ring r4 = testutil::numbered_ring(4);
    TermOrder g4 = TermOrder::grevlex(4);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2; ++k) {
        Polynomial f = testutil::random_polynomial(rng, 4, 3, 2);
        if (!f.is_zero()) gens.push_back(f);
      }
      if (gens.empty()) continue;
      PolyIdeal ideal(r4, gens);
      if (reduced_groebner_basis(ideal, g4).is_unit()) continue;
      PolyIdeal ini = PolyIdeal::from_monomial_ideal(initial_ideal(ideal, g4));
      CHECK(standard_monomial_counts(ideal, g4, 5) == standard_monomial_counts(ini, g4, 5));
    }
  }
}

TEST_CASE("factorable Groebner bases") {
  Ring r = testutil::ring_of({"x", "y", "b0", "b1"});
  TermOrder lex = TermOrder::lex(4);

  SUBCASE("monomial ideal plus a two-variable form stays factorable") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
      MonomialIdeal mono = testutil::random_monomial_ideal(rng, r, 4, 3, 2);
      std::vector<Polynomial> gens;
      for (const auto& m : mono.min_gens()) gens.push_back(Polynomial::from_monomial(m));
      gens.push_back(P(r, "b0 + b1"));
      GroebnerBasis gb = reduced_groebner_basis(PolyIdeal(r, gens), lex);
      REQUIRE(!gb.is_unit());
      FactorablePartition part{{0, 1}, {2, 3}};
      CHECK(verify_factorable(gb, r, part).ok);

      // the top form variable never climbs past degree 1 in the new initial
      // ideal, and the old variables never climb at all
      MonomialIdeal ini = initial_ideal(gb, r);
      CHECK(ini.var_degree(2) == 1);
      CHECK(ini.var_degree(0) <= mono.var_degree(0));
      CHECK(ini.var_degree(1) <= mono.var_degree(1));
    }
  }

  SUBCASE("mixed support fails, explicit factorizations are reported") {
    GroebnerBasis fake{TermOrder::lex(4), {P(r, "x + y")}, false};
    FactorizationReport bad = verify_factorable(fake, r, FactorablePartition{{0}, {1}});
    CHECK(!bad.ok);

    GroebnerBasis two{TermOrder::lex(4), {P(r, "x*y*b0 + x*y*b1"), P(r, "b0*b1")}, false};
    FactorizationReport good = verify_factorable(two, r, FactorablePartition{{0, 1}, {2, 3}});
    CHECK(good.ok);
    CHECK(good.items[0].monomial_part == M(r, "x*y"));
    CHECK(good.items[0].r2_part == P(r, "b0 + b1"));
    CHECK(good.items[1].monomial_part.is_one());
    CHECK(good.items[1].r2_part == P(r, "b0*b1"));

    CHECK_THROWS_AS(verify_factorable(two, r, FactorablePartition{{0}, {0}}),
                    std::invalid_argument);
  }
}
