#pragma once

// Self-contained invariant suite behind the `check` CLI subcommand.
// Fast level exercises every module on double-safe parameter ranges;
// full level adds extended-precision round trips and control-search
// cross-checks of the distance.

#include <cstdint>
#include <string>
#include <vector>

namespace heis {

enum class CheckLevel { Fast, Full };

struct CheckResult {
  std::string group;
  bool pass = false;
  std::string detail;  // worst offender, or a short summary
};

std::vector<CheckResult> run_checks(CheckLevel level, std::uint64_t seed = 42);

}  // namespace heis
