#pragma once

#include "dseries/realform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dseries {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Worker threads; results are reported in a fixed order regardless.
    unsigned threads = 1;
    /// Extra discrete-series parameter to include in the sweeps.
    std::optional<Weight> lambda;
    /// Seed for the sampled strongly antidominant parameters.
    unsigned seed = 20240611;
};

/// Runs the invariant suite for one equal-rank form. Each property is an
/// exact identity or an agreement with an independent oracle.
std::vector<PropertyResult> run_verify(const EqualRankForm& form, const VerifyOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace dseries
