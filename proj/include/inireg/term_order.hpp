#pragma once

#include <compare>
#include <string>
#include <vector>

#include "inireg/monomial.hpp"
#include "inireg/ring.hpp"

namespace inireg {

enum class OrderKind { Lex, GrLex, GrevLex };

enum class Ordering { LT, EQ, GT };

std::string to_string(OrderKind kind);

/// A term order: one of lex / grlex / grevlex together with an explicit
/// variable-priority permutation (highest-priority variable first).
///
/// All three kinds are total multiplicative orders with 1 smallest. The
/// graded kinds compare total degree first; grevlex breaks degree ties on the
/// lowest-priority variable whose exponents differ (smaller exponent wins),
/// grlex falls back to lex.
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::vector<int> priority);

  static TermOrder lex(int nvars) { return TermOrder(OrderKind::Lex, identity(nvars)); }
  static TermOrder grlex(int nvars) { return TermOrder(OrderKind::GrLex, identity(nvars)); }
  static TermOrder grevlex(int nvars) { return TermOrder(OrderKind::GrevLex, identity(nvars)); }

  /// Builds an order from a partial priority chain (top first); variables not
  /// mentioned are appended in ring order.
  static TermOrder with_top(OrderKind kind, int nvars, const std::vector<int>& top_first);

  OrderKind kind() const { return kind_; }
  int nvars() const { return static_cast<int>(priority_.size()); }
  const std::vector<int>& priority() const { return priority_; }
  /// position_of(v) = rank of variable v, 0 = highest priority.
  int position_of(int v) const { return position_[v]; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  /// Compares two variables as degree-1 monomials (priority rank).
  bool var_greater(int u, int v) const { return position_[u] < position_[v]; }

  bool operator==(const TermOrder& other) const {
    return kind_ == other.kind_ && priority_ == other.priority_;
  }

  std::string to_string(const Ring& ring) const;

 private:
  static std::vector<int> identity(int n);

  OrderKind kind_;
  std::vector<int> priority_;  // priority_[0] = top variable index
  std::vector<int> position_;  // inverse permutation
};

/// Three-way comparison of monomials under a term order; errors on ring size
/// mismatch.
Ordering compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b);

/// A list of term orders >_1,...,>_q; a single order replicates across steps.
struct OrderSchedule {
  std::vector<TermOrder> orders;

  explicit OrderSchedule(std::vector<TermOrder> list);
  const TermOrder& at_step(int i) const;  // 1-based, clamps to the last order
  int size() const { return static_cast<int>(orders.size()); }
};

}  // namespace inireg
