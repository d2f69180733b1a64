#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

struct SuiteReport {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures == 0

  bool passed() const { return failures == 0; }
};

// Names accepted by run_verification, in run order.
const std::vector<std::string>& verification_suites();

// Runs one named suite, or all of them when `suite` is empty, using SplitMix64
// seeded with `seed`. Throws InvalidArgument for an unknown suite name.
std::vector<SuiteReport> run_verification(std::string_view suite, std::uint64_t seed);

}  // namespace omega
