// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace folm {

// Named invariant and regression checks behind the CLI `check` subcommand.
// `perturb` injects a relative miscalibration into the reference-value
// comparisons; nonzero values exist so the harness itself can be exercised.

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<CheckResult> run_self_checks(std::uint64_t seed, double perturb = 0.0);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace folm
