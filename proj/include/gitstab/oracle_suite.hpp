#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab {

// Randomized cross-checks of the engine against brute-force evaluation.
struct SuiteResult {
  std::string suite;
  i64 trials = 0;
  i64 checks = 0;
  i64 failures = 0;
  // Mismatches of printed closed forms that are tracked but not failures.
  i64 printed_mismatches = 0;
  std::vector<std::string> notes;
};

SuiteResult run_oracle_suite(const std::string& suite, i64 trials, std::uint64_t seed);

}  // namespace gitstab
