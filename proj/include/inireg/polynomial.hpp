#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inireg/monomial.hpp"
#include "inireg/rational.hpp"
#include "inireg/ring.hpp"
#include "inireg/term_order.hpp"

namespace inireg {

struct Term {
  Rational coefficient;  // nonzero
  Monomial monomial;
};

/// An exact multivariate polynomial over the rationals, kept in canonical
/// form after every operation: no zero coefficients, no duplicate monomials.
/// The zero polynomial has an empty term set.
class Polynomial {
 public:
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(int nvars, int v);
  /// Sum of distinct variables.
  static Polynomial variable_sum(int nvars, const std::vector<int>& vars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  bool is_constant() const;
  /// Total degree of the polynomial; -1 for the zero polynomial.
  int degree() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  /// If the polynomial is c*m for a single term, returns it.
  std::optional<Term> as_single_term() const;
  std::uint32_t support_mask() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  Polynomial times(const Rational& c) const;

  bool operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  /// The order-maximal term; errors on the zero polynomial.
  Term leading_term(const TermOrder& order) const;
  Monomial leading_monomial(const TermOrder& order) const;
  Polynomial monic(const TermOrder& order) const;

  /// Terms printed in descending order under `order`.
  std::string to_string(const Ring& ring, const TermOrder& order) const;
  std::string to_string(const Ring& ring) const;  // descending grevlex, ring priority

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;  // keyed by exponent-lex; canonical storage
};

}  // namespace inireg
