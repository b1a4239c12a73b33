#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rcag/circular.hpp"
#include "rcag/process.hpp"
#include "rcag/thresholds.hpp"

namespace rcag {

struct PowerConfig {
    std::string process;  ///< ProcessSpec text
    std::size_t m = 1000;
    std::size_t replicates = 1000;
    double alpha = 0.05;
    std::string test = "dd";  ///< "ep" or "dd"
    RngSeed seed;
    unsigned workers = 1;
};

struct PowerReport {
    std::string process;
    std::size_t m = 0;
    std::size_t replicates = 0;
    double alpha = 0.0;
    std::string test;
    std::size_t rejections = 0;
    double rejection_rate = 0.0;  ///< rejections / replicates
    double standard_error = 0.0;  ///< sqrt(rate (1 - rate) / replicates)
    RngSeed seed;
    std::optional<ThresholdSource> threshold_source;
    double wall_time = 0.0;  ///< seconds; not part of the JSON report
};

/// Replicate r draws its series from seed.child("replicate", r) and runs the
/// test with seed.child("test", r), so the count is independent of workers.
[[nodiscard]] PowerReport run_power(const PowerConfig& config, const ThresholdTable& thresholds);

struct PropertyCheck {
    std::string name;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct TheoryValidation {
    RngSeed seed;
    std::size_t draws = 0;
    std::vector<PropertyCheck> checks;
    [[nodiscard]] bool all_passed() const noexcept;
};

inline constexpr std::size_t kDefaultTheoryDraws = 1'000'000;

/// Exact ordering oracles plus Monte-Carlo checks of the edge probability,
/// joint non-edge probability, arc-length law, degree-law convergence and
/// extreme degrees.
[[nodiscard]] TheoryValidation validate_theory(RngSeed seed, std::size_t draws = kDefaultTheoryDraws,
                                               unsigned workers = 1);

}  // namespace rcag
