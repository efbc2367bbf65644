#include "inireg/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace inireg {

Monomial Monomial::variable(int nvars, int v, int power) {
  Monomial m(nvars);
  if (v < 0 || v >= nvars) throw std::out_of_range("variable index out of range");
  if (power < 0) throw std::invalid_argument("negative exponent");
  m.e_[v] = power;
  return m;
}

Monomial Monomial::from_exponents(std::vector<int> exponents) {
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  Monomial m(static_cast<int>(exponents.size()));
  m.e_ = std::move(exponents);
  return m;
}

int Monomial::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](int e) { return e <= 1; });
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t m = 0;
  for (int v = 0; v < nvars(); ++v)
    if (e_[v] > 0) m |= (1u << v);
  return m;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int v = 0; v < nvars(); ++v)
    if (e_[v] > 0) s.push_back(v);
  return s;
}

bool Monomial::divides(const Monomial& m) const {
  if (nvars() != m.nvars()) throw std::invalid_argument("monomial ring mismatch");
  for (int v = 0; v < nvars(); ++v)
    if (e_[v] > m.e_[v]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  if (!d.divides(*this)) throw std::invalid_argument("inexact monomial division");
  Monomial q(nvars());
  for (int v = 0; v < nvars(); ++v) q.e_[v] = e_[v] - d.e_[v];
  return q;
}

Monomial Monomial::with_exponent(int v, int value) const {
  Monomial m = *this;
  if (value < 0) throw std::invalid_argument("negative exponent");
  m.e_[v] = value;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial ring mismatch");
  Monomial p(a.nvars());
  for (int v = 0; v < a.nvars(); ++v) p.e_[v] = a.e_[v] + b.e_[v];
  return p;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial ring mismatch");
  Monomial m(a.nvars());
  for (int v = 0; v < a.nvars(); ++v) m.e_[v] = std::max(a.e_[v], b.e_[v]);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial ring mismatch");
  Monomial m(a.nvars());
  for (int v = 0; v < a.nvars(); ++v) m.e_[v] = std::min(a.e_[v], b.e_[v]);
  return m;
}

std::string Monomial::to_string(const Ring& ring) const {
  if (is_one()) return "1";
  std::string s;
  for (int v = 0; v < nvars(); ++v) {
    if (e_[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(v);
    if (e_[v] > 1) s += "^" + std::to_string(e_[v]);
  }
  return s;
}

}  // namespace inireg
