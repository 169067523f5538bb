#pragma once

#include <cstddef>
#include <optional>

#include "cvq/report.hpp"
#include "cvq/scenario.hpp"

namespace cvq {

struct RunOptions {
    double tolerance_scale = 1.0;
    bool exhaustive_relatedness = false;  // relatedness over the full symmetric group
    std::optional<std::size_t> max_n;     // overrides a2-falsify's max_n
};

/// Execute every check of `s` in declared order. Exceptions inside a check
/// become status "error" on that check; the run itself never throws for them.
Report run_scenario(const Scenario& s, const RunOptions& options = {});

}  // namespace cvq
