#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "futaki/characters.hpp"

namespace futaki {

/// Outcome of one self-verification check.
struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// The built-in verification suites.  "all" runs every check once, in the
/// fixed order below:
///   oracles:     oracle-equivalence
///   invariance:  linearization-invariance, power-invariance
///   cubics:      cubic-polystability-vanishing, cubic-instability-verdicts
///   decay:       pullback-equality, continuity-decay
///   calibration: corollary-calibration, theorem-corollary-consistency
enum class Suite { oracles, invariance, decay, calibration, cubics, all };

/// Maps a suite name to the enum; unknown names throw invalid_input.
Suite suite_from_name(const std::string& name);

/// Runs the checks of the suite and returns their results (never throws:
/// a check that raises is reported as failed with the message as detail).
/// enum_cap bounds the brute-force oracle enumerations.
std::vector<CheckResult> run_suite(Suite suite, std::uint64_t enum_cap = kDefaultEnumCap);

} // namespace futaki
