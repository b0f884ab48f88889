#pragma once

#include <string>
#include <vector>

namespace starsearch {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Property suites behind the `verify` CLI command: exhaustive liar-game
// decoding, evaluator-vs-closed-form agreement, Pareto tightness, and the
// brute-force oracle cross-check. `tol_scale` multiplies every tolerance
// (values below 1 tighten the checks; useful for exercising failure paths).
std::vector<CheckResult> verify_advice(double tol_scale = 1.0);
std::vector<CheckResult> verify_directional(double tol_scale = 1.0);
std::vector<CheckResult> verify_positional(double tol_scale = 1.0);
std::vector<CheckResult> verify_all(double tol_scale = 1.0);

}  // namespace starsearch
