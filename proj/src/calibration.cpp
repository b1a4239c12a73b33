#include "rcag/calibration.hpp"

#include <algorithm>
#include <cmath>

#include "rcag/errors.hpp"
#include "rcag/parallel.hpp"
#include "rcag/randomness_tests.hpp"

namespace rcag {

double percentile(std::span<const double> sample, double q) {
    if (sample.empty()) {
        throw InvalidInput("percentile of an empty sample");
    }
    if (!(q > 0.0 && q < 100.0)) {
        throw InvalidInput("percentile rank must lie in (0, 100)");
    }
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double rank = q * static_cast<double>(sorted.size() - 1) / 100.0;  // zero-based
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<double> null_dd_statistics(std::size_t m, std::size_t k, RngSeed seed, unsigned workers) {
    if (m < 4 || m % 2 != 0) {
        throw InvalidInput("calibration needs an even series length >= 4, got " + std::to_string(m));
    }
    if (k == 0) {
        throw InvalidInput("calibration needs at least one replicate");
    }
    std::vector<double> stats(k);
    parallel_for(k, workers, [&](std::size_t i) {
        stats[i] = dd_statistic(sample_circular_uniform(seed.child("calib", i), m));
    });
    return stats;
}

std::vector<ThresholdEntry> calibrate_threshold(std::size_t m, std::span<const double> alphas, std::size_t k,
                                                RngSeed seed, unsigned workers) {
    if (k < 100) {
        throw InvalidInput("calibration needs k >= 100 replicates");
    }
    if (alphas.empty()) {
        throw InvalidInput("no significance levels requested");
    }
    for (double a : alphas) {
        if (!(a > 0.0 && a < 1.0)) {
            throw InvalidInput("significance level must lie in (0, 1)");
        }
    }
    const auto stats = null_dd_statistics(m, k, seed, workers);
    std::vector<ThresholdEntry> out;
    out.reserve(alphas.size());
    for (double a : alphas) {
        ThresholdEntry e;
        e.m = m;
        e.alpha = a;
        e.c = percentile(stats, 100.0 * (1.0 - a));
        e.k = k;
        e.seed = seed.master;
        e.stream = seed.stream;
        e.source = ThresholdSource::Calibrated;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace rcag
