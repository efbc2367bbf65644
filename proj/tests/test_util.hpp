#pragma once

#include <random>
#include <string>
#include <vector>

#include "inireg/monomial_ideal.hpp"
#include "inireg/poly_parser.hpp"
#include "inireg/polynomial.hpp"
#include "inireg/ring.hpp"

namespace testutil {

inline inireg::Ring ring_of(std::initializer_list<std::string> names) {
  return inireg::Ring(std::vector<std::string>(names));
}

inline inireg::Polynomial P(const inireg::Ring& ring, const std::string& text) {
  return inireg::parse_polynomial(text, ring);
}

inline inireg::Monomial M(const inireg::Ring& ring, const std::string& text) {
  auto poly = inireg::parse_polynomial(text, ring);
  auto term = poly.as_single_term();
  REQUIRE(term.has_value());
  REQUIRE(term->coefficient == 1);
  return term->monomial;
}

inline inireg::MonomialIdeal MI(const inireg::Ring& ring,
                                std::initializer_list<std::string> gens) {
  std::vector<inireg::Monomial> ms;
  for (const auto& g : gens) ms.push_back(M(ring, g));
  return inireg::MonomialIdeal::from_generators(ring, std::move(ms));
}

inline inireg::Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_exp) {
  std::uniform_int_distribution<int> dist(0, max_exp);
  std::vector<int> exps(nvars);
  for (auto& e : exps) e = dist(rng);
  return inireg::Monomial::from_exponents(std::move(exps));
}

inline inireg::Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int max_terms,
                                            int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-6, 6);
  inireg::Polynomial f(nvars);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) f.add_term(random_monomial(rng, nvars, max_exp), coeff(rng));
  return f;
}

/// Random proper monomial ideal; exponents mostly 1 with occasional max_exp.
inline inireg::MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const inireg::Ring& ring,
                                                   int max_gens, int max_support, int max_exp) {
  std::uniform_int_distribution<int> ngens(1, max_gens);
  std::uniform_int_distribution<int> support(1, max_support);
  std::uniform_int_distribution<int> var(0, ring.size() - 1);
  std::uniform_int_distribution<int> exp(1, max_exp);
  std::vector<inireg::Monomial> gens;
  int count = ngens(rng);
  for (int g = 0; g < count; ++g) {
    inireg::Monomial m(ring.size());
    int s = support(rng);
    for (int k = 0; k < s; ++k) {
      int v = var(rng);
      m = m.with_exponent(v, std::max(m.exponent(v), exp(rng)));
    }
    if (!m.is_one()) gens.push_back(m);
  }
  if (gens.empty()) gens.push_back(inireg::Monomial::variable(ring.size(), 0));
  return inireg::MonomialIdeal::from_generators(ring, std::move(gens));
}

inline inireg::Ring numbered_ring(int n, const std::string& prefix = "x") {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return inireg::Ring(names);
}

}  // namespace testutil
