#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "inireg/ring.hpp"

namespace inireg {

/// A monomial as a dense exponent vector of fixed length n. Desk-scale rings
/// have few variables, so dense storage wins over sparse maps.
///
/// operator< is plain exponent-wise lexicographic comparison; it is a
/// container ordering for canonical storage, not a term order.
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial variable(int nvars, int v, int power = 1);
  static Monomial from_exponents(std::vector<int> exponents);

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int v) const { return e_[v]; }
  const std::vector<int>& exponents() const { return e_; }
  int total_degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  /// Bitmask of variables with positive exponent (nvars <= 32).
  std::uint32_t support_mask() const;
  std::vector<int> support() const;

  bool divides(const Monomial& m) const;
  Monomial divided_by(const Monomial& d) const;  // exact, caller ensures d | *this
  Monomial with_exponent(int v, int value) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

  std::string to_string(const Ring& ring) const;

 private:
  std::vector<int> e_;
};

}  // namespace inireg
