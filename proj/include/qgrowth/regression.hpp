#pragma once

#include <string>
#include <vector>

namespace qgrowth {

struct RegressionResult {
    std::string key;    // location in the accompanying write-up
    std::string title;
    bool pass = false;
    std::string detail;  // filled on failure
};

// Built-in regression corpus: every worked example and bound reproduced at
// desk scale. Deterministic; safe to run repeatedly.
std::vector<RegressionResult> run_regression();

}  // namespace qgrowth
