#include "inireg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace inireg {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial f(nvars);
  f.add_term(Monomial::one(nvars), c);
  return f;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
  Polynomial f(m.nvars());
  f.add_term(m, c);
  return f;
}

Polynomial Polynomial::variable(int nvars, int v) {
  return from_monomial(Monomial::variable(nvars, v));
}

Polynomial Polynomial::variable_sum(int nvars, const std::vector<int>& vars) {
  Polynomial f(nvars);
  for (int v : vars) f.add_term(Monomial::variable(nvars, v), 1);
  if (f.num_terms() != static_cast<int>(vars.size()))
    throw std::invalid_argument("variable sum requires distinct variables");
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::optional<Term> Polynomial::as_single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return Term{terms_.begin()->second, terms_.begin()->first};
}

std::uint32_t Polynomial::support_mask() const {
  std::uint32_t mask = 0;
  for (const auto& [m, c] : terms_) mask |= m.support_mask();
  return mask;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("term from a different ring");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial g(nvars_);
  for (const auto& [m, c] : terms_) g.terms_.emplace(m, -c);
  return g;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  if (g.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  if (g.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.nvars_ != g.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Polynomial p(f.nvars_);
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) p.add_term(mf * mg, cf * cg);
  return p;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  Polynomial p(nvars_);
  if (c == 0) return p;
  for (const auto& [mf, cf] : terms_) p.terms_.emplace(mf * m, cf * c);
  return p;
}

Polynomial Polynomial::times(const Rational& c) const {
  return times_term(c, Monomial::one(nvars_));
}

Term Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  if (order.nvars() != nvars_) throw std::invalid_argument("order from a different ring");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return Term{best->second, best->first};
}

Monomial Polynomial::leading_monomial(const TermOrder& order) const {
  return leading_term(order).monomial;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  Term lt = leading_term(order);
  return times(Rational(1) / lt.coefficient);
}

std::string Polynomial::to_string(const Ring& ring, const TermOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* a, auto* b) { return order.greater(a->first, b->first); });
  std::string s;
  bool first = true;
  for (auto* t : sorted) {
    Rational c = t->second;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    if (t->first.is_one()) {
      s += inireg::to_string(c);
    } else {
      if (c != 1) s += inireg::to_string(c) + "*";
      s += t->first.to_string(ring);
    }
  }
  return s;
}

std::string Polynomial::to_string(const Ring& ring) const {
  return to_string(ring, TermOrder::grevlex(nvars_));
}

}  // namespace inireg
