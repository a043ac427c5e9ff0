#pragma once

#include <string>
#include <vector>

namespace steiner_helix {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The hermetic cross-check suite behind `srf verify` and the acceptance
/// test binary. Deterministic (fixed seeds, fixed evaluation order); fast
/// mode shrinks sample counts and grids without dropping any check.
std::vector<CheckResult> run_acceptance_checks(bool fast = false);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace steiner_helix
