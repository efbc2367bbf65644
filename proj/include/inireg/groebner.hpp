#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "inireg/monomial_ideal.hpp"
#include "inireg/polynomial.hpp"
#include "inireg/ring.hpp"
#include "inireg/term_order.hpp"

namespace inireg {

/// An ideal of the polynomial ring given by explicit generators. An empty
/// generator list is the zero ideal.
struct PolyIdeal {
  Ring ring;
  std::vector<Polynomial> generators;

  PolyIdeal(Ring r, std::vector<Polynomial> gens);
  static PolyIdeal from_monomial_ideal(const MonomialIdeal& ideal);
  bool is_zero() const { return generators.empty(); }
};

/// Raised where an operation needs a proper ideal but the Groebner basis
/// turned out to be (1). Callers that must bail out gracefully check
/// GroebnerBasis::is_unit() instead.
class UnitIdealError : public std::runtime_error {
 public:
  UnitIdealError() : std::runtime_error("ideal is the unit ideal") {}
};

struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> elements;  // monic, sorted ascending by leading monomial
  bool reduced = false;

  bool is_unit() const;
};

/// S(f,g) = (lcm/in f)*f - (lcm/in g)*g with exact coefficients.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Remainder of multivariate division of f by the list G: no term of the
/// output is divisible by any leading term of G, and f - output lies in <G>.
/// Deterministic: the highest reducible term is reduced first, by the first
/// eligible divisor in list order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrder& order);

/// Buchberger with the normal pair-selection strategy (smallest lcm in the
/// active order) and the coprime-leading-term criterion, followed by
/// minimalization and inter-reduction. The result is the unique reduced
/// Groebner basis; the unit ideal comes back as the basis {1} with
/// is_unit() true, never as an exception.
GroebnerBasis reduced_groebner_basis(const PolyIdeal& ideal, const TermOrder& order);

bool basis_contains(const GroebnerBasis& basis, const Polynomial& f);

/// Minimal monomial generators of the ideal of leading terms. Throws
/// UnitIdealError on the unit ideal.
MonomialIdeal initial_ideal(const PolyIdeal& ideal, const TermOrder& order);
MonomialIdeal initial_ideal(const GroebnerBasis& basis, const Ring& ring);

/// I : f = { g | g*f in I }, computed via an auxiliary variable t prepended
/// with an elimination order: I : f = (1/f) * (I meet (f)).
PolyIdeal ideal_quotient(const PolyIdeal& ideal, const Polynomial& f, const TermOrder& order);

/// True iff (I : f) = I, i.e. f is a non-zerodivisor on R/I. The property is
/// order independent; the order only drives the Groebner computations.
/// Errors: f constant, f in I, or I the unit ideal.
bool is_regular_element(const PolyIdeal& ideal, const Polynomial& f, const TermOrder& order);

/// Counts of standard monomials (monomials outside ini(I)) in each degree
/// 0..D. Throws UnitIdealError on the unit ideal.
std::vector<long long> standard_monomial_counts(const PolyIdeal& ideal, const TermOrder& order,
                                                int degree_bound);

struct FactorablePartition {
  std::vector<int> r1_vars;
  std::vector<int> r2_vars;  // disjoint from r1_vars
};

/// Per-element factorization f = M*g with M a monomial in r1_vars and g a
/// polynomial in r2_vars.
struct FactorizationReport {
  struct Item {
    bool ok = false;
    Monomial monomial_part;   // M, meaningful when ok
    Polynomial r2_part;       // g, meaningful when ok
    std::string detail;

    Item(int nvars) : monomial_part(nvars), r2_part(nvars) {}
  };
  bool ok = false;
  std::vector<Item> items;
};

FactorizationReport verify_factorable(const GroebnerBasis& basis, const Ring& ring,
                                      const FactorablePartition& partition);

}  // namespace inireg
