#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "so3x8/liealg.hpp"

namespace so3x8::verify {

/// One verified claim: the claim text, the expected value, what was actually
/// computed, and whether they agree.
struct CheckResult {
    std::string claim;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// One acceptance criterion: an anchor naming the headline claim, the
/// individual checks behind it, and an optional note (used where the
/// implementation corrects a slip in the commonly quoted value).
struct CriterionResult {
    int id = 0;
    std::string anchor;
    std::vector<CheckResult> checks;
    std::string note;
    bool pass = false;
};

struct CheckOptions {
    /// Replace a built algebra's subspace by name (so3so5 | psu3 | sp2sp1)
    /// before running the algebra-level checks; used by the negative-path
    /// fixture of the verification command.
    std::map<std::string, liealg::Subspace> algebra_overrides;
    std::uint64_t seed = 0x5073c3a1u;  // sampling seed for the case solver
    long long samples = 10000;         // random (A, B) samples
    int resolution = 8;                // pencil-scan slope resolution
};

/// Runs the eleven acceptance criteria in order.  Never throws: a criterion
/// whose computation throws is reported as failed with the message captured.
std::vector<CriterionResult> run_criteria(const CheckOptions& options = {});

nlohmann::ordered_json criteria_json(const std::vector<CriterionResult>& criteria);

}  // namespace so3x8::verify
