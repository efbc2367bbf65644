#include "inireg/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace inireg {

PolyIdeal::PolyIdeal(Ring r, std::vector<Polynomial> gens)
    : ring(std::move(r)), generators(std::move(gens)) {
  for (const auto& g : generators) {
    if (g.nvars() != ring.size()) throw std::invalid_argument("generator from a different ring");
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  }
}

PolyIdeal PolyIdeal::from_monomial_ideal(const MonomialIdeal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& m : ideal.min_gens()) gens.push_back(Polynomial::from_monomial(m));
  return PolyIdeal(ideal.ring(), std::move(gens));
}

bool GroebnerBasis::is_unit() const {
  return elements.size() == 1 && elements.front().is_constant() && !elements.front().is_zero();
}

namespace {

// The engine runs over an arbitrary monomial comparator so that elimination
// (block) orders can share the same code paths as the public term orders.
template <typename Cmp>
Term leading(const Polynomial& f, const Cmp& cmp) {
  auto it = f.terms().begin();
  auto best = it;
  for (++it; it != f.terms().end(); ++it)
    if (cmp(it->first, best->first) > 0) best = it;
  return Term{best->second, best->first};
}

template <typename Cmp>
Polynomial spoly_impl(const Polynomial& f, const Polynomial& g, const Cmp& cmp) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s-polynomial of zero");
  Term tf = leading(f, cmp);
  Term tg = leading(g, cmp);
  Monomial l = lcm(tf.monomial, tg.monomial);
  Polynomial left = f.times_term(Rational(1) / tf.coefficient, l.divided_by(tf.monomial));
  Polynomial right = g.times_term(Rational(1) / tg.coefficient, l.divided_by(tg.monomial));
  return left - right;
}

template <typename Cmp>
Polynomial normal_form_impl(const Polynomial& f, std::span<const Polynomial> basis,
                            const Cmp& cmp, const std::vector<Monomial>& lead_monos) {
  Polynomial remainder(f.nvars());
  Polynomial h = f;
  while (!h.is_zero()) {
    Term lt = leading(h, cmp);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!lead_monos[i].divides(lt.monomial)) continue;
      const Polynomial& g = basis[i];
      Term ltg = leading(g, cmp);
      h -= g.times_term(lt.coefficient / ltg.coefficient, lt.monomial.divided_by(ltg.monomial));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lt.monomial, lt.coefficient);
      h.add_term(lt.monomial, -lt.coefficient);
    }
  }
  return remainder;
}

template <typename Cmp>
std::vector<Monomial> leading_monomials(std::span<const Polynomial> basis, const Cmp& cmp) {
  std::vector<Monomial> lms;
  lms.reserve(basis.size());
  for (const auto& g : basis) lms.push_back(leading(g, cmp).monomial);
  return lms;
}

// Buchberger main loop. Normal strategy: the pending pair with the smallest
// lcm of leading monomials is processed first, ties by index pair; pairs with
// coprime leading terms are skipped. Returns a (not yet reduced) basis, or a
// single constant when the ideal is the whole ring.
template <typename Cmp>
std::vector<Polynomial> buchberger_impl(const std::vector<Polynomial>& gens, const Cmp& cmp) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return {};
  for (const auto& g : basis)
    if (g.is_constant()) return {Polynomial::constant(g.nvars(), 1)};

  std::vector<Monomial> lms = leading_monomials(std::span<const Polynomial>(basis), cmp);

  struct Pair {
    size_t i, j;
    Monomial l;
  };
  std::vector<Pair> pending;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) pending.push_back({i, j, lcm(lms[i], lms[j])});
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!pending.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k) {
      auto c = cmp(pending[k].l, pending[best].l);
      if (c < 0 || (c == 0 && std::pair(pending[k].i, pending[k].j) <
                                  std::pair(pending[best].i, pending[best].j)))
        best = k;
    }
    Pair p = pending[best];
    pending.erase(pending.begin() + best);

    if (gcd(lms[p.i], lms[p.j]).is_one()) continue;  // coprime criterion

    Polynomial s = spoly_impl(basis[p.i], basis[p.j], cmp);
    Polynomial r = normal_form_impl(s, std::span<const Polynomial>(basis), cmp, lms);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {Polynomial::constant(r.nvars(), 1)};
    basis.push_back(r);
    lms.push_back(leading(r, cmp).monomial);
    push_pairs_for(basis.size() - 1);
  }
  return basis;
}

// Minimalize + inter-reduce + normalize; the result is the unique reduced
// basis, sorted ascending by leading monomial.
template <typename Cmp>
std::vector<Polynomial> reduce_basis_impl(std::vector<Polynomial> basis, const Cmp& cmp) {
  if (basis.empty()) return basis;
  for (const auto& g : basis)
    if (g.is_constant()) return {Polynomial::constant(g.nvars(), 1)};

  std::vector<Monomial> lms = leading_monomials(std::span<const Polynomial>(basis), cmp);
  std::vector<size_t> idx(basis.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    auto c = cmp(lms[a], lms[b]);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> kept;
  for (size_t k : idx) {
    bool divisible = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& m) { return m.divides(lms[k]); });
    if (!divisible) {
      minimal.push_back(basis[k]);
      kept.push_back(lms[k]);
    }
  }

  bool changed = true;
  int guard = 0;
  while (changed && guard++ < 1000) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      std::vector<Monomial> other_lms;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) {
          others.push_back(minimal[j]);
          other_lms.push_back(kept[j]);
        }
      Polynomial r =
          normal_form_impl(minimal[i], std::span<const Polynomial>(others), cmp, other_lms);
      if (!(r == minimal[i])) {
        minimal[i] = r;
        changed = true;
      }
    }
  }

  for (auto& g : minimal) {
    Term lt = leading(g, cmp);
    g = g.times(Rational(1) / lt.coefficient);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return cmp(leading(a, cmp).monomial, leading(b, cmp).monomial) < 0;
  });
  return minimal;
}

struct TermOrderCmp {
  const TermOrder& order;
  int operator()(const Monomial& a, const Monomial& b) const {
    auto c = order.compare(a, b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
};

// Degree-in-t first, then the base order on the original variables (shifted
// up by one index). Eliminating t computes intersections.
struct EliminationCmp {
  const TermOrder& base;

  int operator()(const Monomial& a, const Monomial& b) const {
    if (a.exponent(0) != b.exponent(0)) return a.exponent(0) < b.exponent(0) ? -1 : 1;
    const int n = base.nvars();
    if (base.kind() != OrderKind::Lex) {
      int da = 0, db = 0;
      for (int v = 1; v <= n; ++v) {
        da += a.exponent(v);
        db += b.exponent(v);
      }
      if (da != db) return da < db ? -1 : 1;
      if (base.kind() == OrderKind::GrevLex) {
        for (int pos = n - 1; pos >= 0; --pos) {
          int v = base.priority()[pos] + 1;
          if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v) ? 1 : -1;
        }
        return 0;
      }
    }
    for (int pos = 0; pos < n; ++pos) {
      int v = base.priority()[pos] + 1;
      if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v) ? -1 : 1;
    }
    return 0;
  }
};

Monomial shift_up(const Monomial& m) {
  std::vector<int> e(m.nvars() + 1, 0);
  for (int v = 0; v < m.nvars(); ++v) e[v + 1] = m.exponent(v);
  return Monomial::from_exponents(std::move(e));
}

Monomial shift_down(const Monomial& m) {
  std::vector<int> e(m.nvars() - 1, 0);
  for (int v = 1; v < m.nvars(); ++v) e[v - 1] = m.exponent(v);
  return Monomial::from_exponents(std::move(e));
}

Polynomial shift_up(const Polynomial& f) {
  Polynomial g(f.nvars() + 1);
  for (const auto& [m, c] : f.terms()) g.add_term(shift_up(m), c);
  return g;
}

Polynomial shift_down(const Polynomial& f) {
  Polynomial g(f.nvars() - 1);
  for (const auto& [m, c] : f.terms()) g.add_term(shift_down(m), c);
  return g;
}

// Exact division q = g / f for f | g; the invariant lt(f) | lt(g) holds at
// every step because leading terms are multiplicative.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f, const TermOrder& order) {
  Polynomial q(g.nvars());
  Polynomial h = g;
  while (!h.is_zero()) {
    Term lh = h.leading_term(order);
    Term lf = f.leading_term(order);
    if (!lf.monomial.divides(lh.monomial))
      throw std::logic_error("inexact polynomial division in ideal quotient");
    Rational c = lh.coefficient / lf.coefficient;
    Monomial m = lh.monomial.divided_by(lf.monomial);
    q.add_term(m, c);
    h -= f.times_term(c, m);
  }
  return q;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  if (f.nvars() != order.nvars() || g.nvars() != order.nvars())
    throw std::invalid_argument("polynomial ring mismatch");
  return spoly_impl(f, g, TermOrderCmp{order});
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrder& order) {
  for (const auto& g : basis)
    if (g.is_zero()) throw std::invalid_argument("zero element in division basis");
  TermOrderCmp cmp{order};
  return normal_form_impl(f, basis, cmp, leading_monomials(basis, cmp));
}

GroebnerBasis reduced_groebner_basis(const PolyIdeal& ideal, const TermOrder& order) {
  if (order.nvars() != ideal.ring.size())
    throw std::invalid_argument("order does not match the ideal's ring");
  TermOrderCmp cmp{order};
  auto basis = reduce_basis_impl(buchberger_impl(ideal.generators, cmp), cmp);
  return GroebnerBasis{order, std::move(basis), true};
}

bool basis_contains(const GroebnerBasis& basis, const Polynomial& f) {
  if (basis.is_unit()) return true;
  return normal_form(f, basis.elements, basis.order).is_zero();
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis, const Ring& ring) {
  if (basis.is_unit()) throw UnitIdealError();
  if (basis.elements.empty()) return MonomialIdeal::zero(ring);
  std::vector<Monomial> lead;
  for (const auto& g : basis.elements) lead.push_back(g.leading_monomial(basis.order));
  return MonomialIdeal::from_generators(ring, std::move(lead));
}

MonomialIdeal initial_ideal(const PolyIdeal& ideal, const TermOrder& order) {
  return initial_ideal(reduced_groebner_basis(ideal, order), ideal.ring);
}

PolyIdeal ideal_quotient(const PolyIdeal& ideal, const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("quotient by the zero polynomial");
  if (ideal.is_zero()) return PolyIdeal(ideal.ring, {});
  if (f.is_constant()) return ideal;

  // K = t*I + (1-t)*(f) in the extended ring; t-free basis elements of K
  // generate I meet (f), and dividing them by f gives I : f.
  std::vector<Polynomial> extended;
  Polynomial t = Polynomial::variable(ideal.ring.size() + 1, 0);
  for (const auto& g : ideal.generators) extended.push_back(t * shift_up(g));
  Polynomial fs = shift_up(f);
  extended.push_back(fs - t * fs);

  EliminationCmp cmp{order};
  auto basis = reduce_basis_impl(buchberger_impl(extended, cmp), cmp);

  std::vector<Polynomial> quotient_gens;
  for (const auto& g : basis) {
    bool t_free = true;
    for (const auto& [m, c] : g.terms())
      if (m.exponent(0) > 0) {
        t_free = false;
        break;
      }
    if (t_free) quotient_gens.push_back(divide_exact(shift_down(g), f, order));
  }
  return PolyIdeal(ideal.ring, std::move(quotient_gens));
}

bool is_regular_element(const PolyIdeal& ideal, const Polynomial& f, const TermOrder& order) {
  if (f.is_constant()) throw std::invalid_argument("regularity test needs a nonconstant polynomial");
  GroebnerBasis gb = reduced_groebner_basis(ideal, order);
  if (gb.is_unit()) throw UnitIdealError();
  if (basis_contains(gb, f)) throw std::invalid_argument("element lies in the ideal");

  PolyIdeal quotient = ideal_quotient(ideal, f, order);
  for (const auto& g : quotient.generators)
    if (!basis_contains(gb, g)) return false;
  // The reverse inclusion I <= I : f always holds; checking it exercises the
  // quotient basis and keeps the equality test symmetric.
  GroebnerBasis gbq = reduced_groebner_basis(quotient, order);
  for (const auto& g : ideal.generators)
    if (!basis_contains(gbq, g)) return false;
  return true;
}

namespace {

void count_standard(const MonomialIdeal& ini, std::vector<int>& exps, int var, int degree_left,
                    std::vector<long long>& counts) {
  int degree = 0;
  for (int e : exps) degree += e;
  if (var == static_cast<int>(exps.size())) {
    if (!ini.contains(Monomial::from_exponents(exps))) ++counts[degree];
    return;
  }
  for (int e = 0; e <= degree_left; ++e) {
    exps[var] = e;
    count_standard(ini, exps, var + 1, degree_left - e, counts);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<long long> standard_monomial_counts(const PolyIdeal& ideal, const TermOrder& order,
                                                int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  MonomialIdeal ini = initial_ideal(ideal, order);
  std::vector<long long> counts(degree_bound + 1, 0);
  std::vector<int> exps(ideal.ring.size(), 0);
  count_standard(ini, exps, 0, degree_bound, counts);
  return counts;
}

FactorizationReport verify_factorable(const GroebnerBasis& basis, const Ring& ring,
                                      const FactorablePartition& partition) {
  const int n = ring.size();
  std::vector<int> side(n, 0);  // 0 = outside, 1 = r1, 2 = r2
  for (int v : partition.r1_vars) {
    if (v < 0 || v >= n) throw std::invalid_argument("partition variable out of range");
    side[v] = 1;
  }
  for (int v : partition.r2_vars) {
    if (v < 0 || v >= n) throw std::invalid_argument("partition variable out of range");
    if (side[v] == 1) throw std::invalid_argument("partition sides overlap on " + ring.name(v));
    side[v] = 2;
  }

  FactorizationReport report;
  report.ok = true;
  for (const auto& f : basis.elements) {
    FactorizationReport::Item item(n);
    bool outside = false;
    bool consistent = true;
    Monomial common_r1(n);
    bool first = true;
    Polynomial r2(n);
    for (const auto& [m, c] : f.terms()) {
      Monomial r1_part(n), r2_part(n);
      for (int v = 0; v < n; ++v) {
        if (m.exponent(v) == 0) continue;
        if (side[v] == 1)
          r1_part = r1_part.with_exponent(v, m.exponent(v));
        else if (side[v] == 2)
          r2_part = r2_part.with_exponent(v, m.exponent(v));
        else
          outside = true;
      }
      if (first) {
        common_r1 = r1_part;
        first = false;
      } else if (!(common_r1 == r1_part)) {
        consistent = false;
      }
      r2.add_term(r2_part, c);
    }
    if (outside) {
      item.detail = "term involves a variable outside the partition";
    } else if (!consistent) {
      item.detail = "terms do not share a common monomial factor in the first block";
    } else {
      item.ok = true;
      item.monomial_part = common_r1;
      item.r2_part = r2;
    }
    report.ok = report.ok && item.ok;
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace inireg
