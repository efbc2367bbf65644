#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inireg {

/// A polynomial ring over the rationals, identified by its ordered list of
/// variable names. Variable identity is positional (index 0..n-1).
class Ring {
 public:
  explicit Ring(std::vector<std::string> variables);

  int size() const { return static_cast<int>(variables_.size()); }
  const std::string& name(int v) const { return variables_.at(v); }
  const std::vector<std::string>& variables() const { return variables_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const Ring& other) const { return variables_ == other.variables_; }
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  std::vector<std::string> variables_;
};

}  // namespace inireg
