// validation.hpp — cross-engine consistency checks runnable from the CLI

#pragma once

#include <string>
#include <vector>

#include "spinstarlab/spinstar.hpp"

namespace spinstarlab {

struct ValidationOptions {
    std::vector<int> bath_sizes{2, 4, 6, 8};
    std::vector<double> ratios{0.1, 1.0, 10.0};
    int grid_points = 25;
    double t_max_tau = 2.0;
    int random_states = 10000;
    unsigned seed = 20240811;
};

struct CheckResult {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    // Most checks pass when deviation <= tolerance; the typo-margin check
    // passes when the deviation exceeds it.
    bool pass_below_tolerance = true;
    bool pass = false;
};

// Closed-form/oracle/sector agreement, conservation laws, the
// separability/concurrence equivalences on random X states, and the
// concurrence-branch polynomial sign arbitration.
std::vector<CheckResult> run_validation_suite(const ValidationOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace spinstarlab
