#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dendro/zlat.hpp"

namespace dendro {

// One evaluated relation instance.
struct CheckRecord {
  std::string relation;
  std::string instance;
  std::string tree;
  bool passed = true;
  std::optional<IntMatrix> witness;
  std::string detail;
};

using Report = std::vector<CheckRecord>;

inline bool all_passed(const Report& r) {
  for (const auto& c : r) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace dendro
