#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enchilada/concrete.hpp"
#include "enchilada/generate.hpp"

namespace enchilada {

struct RandomCheckOptions {
  std::uint64_t seed = 42;
  std::size_t count = 200;  // cases per suite
  Bounds bounds;
  concrete::Tolerances tolerances;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failing instances
};

struct RandomCheckReport {
  RandomCheckOptions options;
  std::vector<SuiteResult> suites;

  bool passed() const;
  std::string transcript() const;
};

/// Runs the invariant suites of the symbolic, numeric and exactness layers
/// on seeded random instances. Each suite draws from its own stream derived
/// from the seed, so a larger count extends the same case list.
RandomCheckReport random_check(const RandomCheckOptions& options);

}  // namespace enchilada
