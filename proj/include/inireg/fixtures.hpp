#pragma once

#include <string>
#include <vector>

namespace inireg {

/// Built-in problem files covering the worked examples the test suite and CLI
/// demos rely on; `--fixture <name>` loads them.
struct Fixture {
  std::string name;
  std::string description;
  std::string text;
};

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(const std::string& name);

}  // namespace inireg
