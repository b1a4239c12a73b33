#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rcag/circular.hpp"
#include "rcag/thresholds.hpp"

namespace rcag {

/// Default replicate count for threshold calibration.
inline constexpr std::size_t kDefaultCalibrationReplicates = 1000;

/// Linear interpolation between order statistics at rank 1 + q(n-1)/100.
[[nodiscard]] double percentile(std::span<const double> sample, double q);

/// Null HD statistics of k circular-uniform series of length m. Replicate i
/// uses seed.child("calib", i).
[[nodiscard]] std::vector<double> null_dd_statistics(std::size_t m, std::size_t k, RngSeed seed,
                                                     unsigned workers = 1);

/// C_alpha(m) as the 100(1 - alpha)th percentile of the null HD sample.
/// All alphas share one replicate set.
[[nodiscard]] std::vector<ThresholdEntry> calibrate_threshold(std::size_t m, std::span<const double> alphas,
                                                              std::size_t k, RngSeed seed, unsigned workers = 1);

}  // namespace rcag
