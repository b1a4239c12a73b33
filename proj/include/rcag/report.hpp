#pragma once

#include <span>
#include <string>

#include "rcag/harness.hpp"
#include "rcag/randomness_tests.hpp"

namespace rcag {

// JSON renderers. Output is a pure function of the inputs (stable key order,
// two-space indent, trailing newline), so reruns compare byte for byte.

[[nodiscard]] std::string to_json(const TestOutcome& outcome);

/// Several outcomes for one series: {"m", "results": [...], "decision"}.
/// The combined decision rejects when any test rejects.
[[nodiscard]] std::string to_json(std::span<const TestOutcome> outcomes);

/// Excludes wall_time.
[[nodiscard]] std::string to_json(const PowerReport& report);

[[nodiscard]] std::string to_json(const TheoryValidation& validation);

/// Human-readable summary tables.
[[nodiscard]] std::string to_text(const TestOutcome& outcome);
[[nodiscard]] std::string to_text(const PowerReport& report);
[[nodiscard]] std::string to_text(const TheoryValidation& validation);

}  // namespace rcag
