#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sbo {

// Outcome of an exhaustive identity check. Failures are reported, not thrown:
// a violation names the generator pair / monomial that broke the identity.
struct CheckReport {
  size_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

}  // namespace sbo
