#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "rcag/circular.hpp"

namespace rcag::testing {

/// Kolmogorov distance of a sample on [0, 2pi) against the uniform CDF.
inline double uniform_ks(std::span<const Angle> series) {
    std::vector<double> v = to_radians(series);
    std::sort(v.begin(), v.end());
    const double n = static_cast<double>(v.size());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double f = v[i] / kTwoPi;
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

inline const std::vector<double>& worked_example_values() {
    static const std::vector<double> v{2.17, 6.12, 1.48, 5.61, 4.34, 6.20, 5.60, 5.48, 3.73, 0.10,
                                       0.24, 2.85, 6.24, 1.36, 6.10, 5.41, 2.11, 3.68, 0.54, 0.27};
    return v;
}

}  // namespace rcag::testing

#include "rcag/calibration.hpp"
#include "rcag/parallel.hpp"
#include "rcag/thresholds.hpp"

namespace rcag::testing {

/// Thresholds calibrated in-process with a seed stream disjoint from the
/// replicate seeds used by the tests.
inline ThresholdTable calibrated_table(std::size_t m, std::span<const double> alphas, std::size_t k) {
    ThresholdTable t;
    for (auto& e : calibrate_threshold(m, alphas, k, RngSeed{987654321, 17}, default_workers())) {
        t.upsert(e);
    }
    return t;
}

}  // namespace rcag::testing
