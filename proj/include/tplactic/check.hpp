#pragma once

#include "tplactic/notation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tplactic {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures; // first few counterexamples

  bool ok() const noexcept { return failed == 0; }
};

struct CheckReport {
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::vector<SuiteResult> suites;

  bool ok() const noexcept;
  std::string to_text() const;
  Json to_json() const;
};

// Runs every randomized property suite `iterations` times. Each suite
// draws from its own stream of `seed`, so reports are reproducible.
CheckReport run_checks(std::size_t iterations, std::uint64_t seed);

} // namespace tplactic
