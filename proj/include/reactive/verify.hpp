#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reactive {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Self-test of the library's closed forms, identities and invariance
/// properties. Deterministic for a given seed.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed = 20110101);

}  // namespace reactive
