#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace albert::selftest {

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
};

std::vector<std::string> suite_names();

// Runs the named invariant suite with a deterministic seed.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

// Runs every suite whose name contains `filter` (all when empty).
std::vector<SuiteResult> run_all(std::uint64_t seed, const std::string& filter = "");

}  // namespace albert::selftest
