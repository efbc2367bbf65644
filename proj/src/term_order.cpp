#include "inireg/term_order.hpp"

#include <numeric>
#include <stdexcept>

namespace inireg {

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "?";
}

std::vector<int> TermOrder::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

TermOrder::TermOrder(OrderKind kind, std::vector<int> priority)
    : kind_(kind), priority_(std::move(priority)) {
  const int n = static_cast<int>(priority_.size());
  if (n == 0) throw std::invalid_argument("empty priority permutation");
  position_.assign(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    int v = priority_[pos];
    if (v < 0 || v >= n || position_[v] != -1)
      throw std::invalid_argument("priority is not a permutation of the ring variables");
    position_[v] = pos;
  }
}

TermOrder TermOrder::with_top(OrderKind kind, int nvars, const std::vector<int>& top_first) {
  std::vector<char> used(nvars, 0);
  std::vector<int> priority;
  priority.reserve(nvars);
  for (int v : top_first) {
    if (v < 0 || v >= nvars) throw std::invalid_argument("priority variable out of range");
    if (used[v]) throw std::invalid_argument("variable mentioned twice in priority chain");
    used[v] = 1;
    priority.push_back(v);
  }
  for (int v = 0; v < nvars; ++v)
    if (!used[v]) priority.push_back(v);
  return TermOrder(kind, std::move(priority));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars() || b.nvars() != nvars())
    throw std::invalid_argument("monomial does not belong to the order's ring");
  if (kind_ != OrderKind::Lex) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da <=> db;
    if (kind_ == OrderKind::GrevLex) {
      // Degree tie: the lowest-priority variable with differing exponent
      // decides, smaller exponent wins.
      for (int pos = nvars() - 1; pos >= 0; --pos) {
        int v = priority_[pos];
        if (a.exponent(v) != b.exponent(v))
          return a.exponent(v) < b.exponent(v) ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
      }
      return std::strong_ordering::equal;
    }
  }
  for (int pos = 0; pos < nvars(); ++pos) {
    int v = priority_[pos];
    if (a.exponent(v) != b.exponent(v)) return a.exponent(v) <=> b.exponent(v);
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::to_string(const Ring& ring) const {
  std::string s = inireg::to_string(kind_);
  for (int pos = 0; pos < nvars(); ++pos) {
    s += pos == 0 ? " " : " > ";
    s += ring.name(priority_[pos]);
  }
  return s;
}

Ordering compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b) {
  auto c = order.compare(a, b);
  if (c < 0) return Ordering::LT;
  if (c > 0) return Ordering::GT;
  return Ordering::EQ;
}

OrderSchedule::OrderSchedule(std::vector<TermOrder> list) : orders(std::move(list)) {
  if (orders.empty()) throw std::invalid_argument("order schedule must be nonempty");
}

const TermOrder& OrderSchedule::at_step(int i) const {
  if (i < 1) throw std::out_of_range("schedule steps are 1-based");
  int idx = i - 1;
  if (idx >= size()) idx = size() - 1;  // a single order replicates
  return orders[idx];
}

}  // namespace inireg
