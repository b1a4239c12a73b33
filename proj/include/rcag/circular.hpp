#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace rcag {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Radian angle kept in [0, 2pi).
class Angle {
public:
    constexpr Angle() = default;

    /// Reduces `radians` modulo 2pi. Throws InvalidInput on NaN/inf.
    static Angle from_radians(double radians);

    [[nodiscard]] constexpr double value() const noexcept { return value_; }

    friend constexpr bool operator==(Angle, Angle) = default;

private:
    explicit constexpr Angle(double v) : value_(v) {}
    double value_ = 0.0;
};

/// Ordered observations; order matters for arc construction.
using AngleSeries = std::vector<Angle>;

[[nodiscard]] Angle normalize_angle(double radians);

/// Builds a series from raw radians, normalizing each value.
[[nodiscard]] AngleSeries make_series(std::span<const double> radians);

[[nodiscard]] std::vector<double> to_radians(std::span<const Angle> series);

/// Identifies a reproducible random stream.
///
/// Logical sub-streams (pairings, replicates, randomized-test coins) are
/// obtained with child(), which hashes (stream, tag, index) so the result
/// does not depend on evaluation order or worker count.
struct RngSeed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;

    [[nodiscard]] RngSeed child(std::string_view tag, std::uint64_t index = 0) const noexcept;

    friend constexpr bool operator==(const RngSeed&, const RngSeed&) = default;
};

/// Seeded generator. Distributions are implemented here rather than with
/// <random> adaptors so the streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(RngSeed seed);

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() noexcept;
    /// Uniform on (0, 1).
    double uniform_open01() noexcept;
    double standard_normal() noexcept;
    double uniform_angle() noexcept { return kTwoPi * uniform01(); }
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// Single von Mises draw (Best-Fisher rejection). kappa == 0 is uniform.
[[nodiscard]] double draw_von_mises(Rng& rng, double mu, double kappa);

/// Single wrapped Cauchy draw. rho == 0 is uniform.
[[nodiscard]] double draw_wrapped_cauchy(Rng& rng, double mu, double rho);

[[nodiscard]] AngleSeries sample_circular_uniform(RngSeed seed, std::size_t count);
[[nodiscard]] AngleSeries sample_von_mises(RngSeed seed, Angle mu, double kappa, std::size_t count);
[[nodiscard]] AngleSeries sample_wrapped_cauchy(RngSeed seed, Angle mu, double rho, std::size_t count);

/// Mean resultant length and mean direction of a sample.
struct CircularMoments {
    double resultant_length;
    double mean_direction;
};

[[nodiscard]] CircularMoments circular_moments(std::span<const Angle> series);

}  // namespace rcag
