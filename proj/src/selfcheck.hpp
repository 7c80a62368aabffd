#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tritorus {

enum class VerifyBudget { quick, full };

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Runs the cross-module invariant suite. `quick` uses CI-sized sample
// budgets (Monte Carlo 2e5), `full` the heavyweight ones (1e6). Stochastic
// checks use substreams of `seed` so a run is reproducible; statistical
// comparisons that land outside their band are retried once on a second
// seed before being reported as failures.
std::vector<CheckResult> run_selfcheck(
    VerifyBudget budget, std::uint64_t seed,
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace tritorus
