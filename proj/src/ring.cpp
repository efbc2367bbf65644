#include "inireg/ring.hpp"

#include <set>
#include <stdexcept>

namespace inireg {

Ring::Ring(std::vector<std::string> variables) : variables_(std::move(variables)) {
  if (variables_.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate ring variable: " + v);
  }
}

std::optional<int> Ring::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

}  // namespace inireg
