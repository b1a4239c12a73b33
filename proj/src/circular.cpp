#include "rcag/circular.hpp"

#include <algorithm>
#include <cmath>

#include "rcag/errors.hpp"

namespace rcag {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Angle Angle::from_radians(double radians) {
    if (!std::isfinite(radians)) {
        throw InvalidInput("angle must be finite");
    }
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round back up to 2pi.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return Angle(r);
}

Angle normalize_angle(double radians) { return Angle::from_radians(radians); }

AngleSeries make_series(std::span<const double> radians) {
    AngleSeries out;
    out.reserve(radians.size());
    for (double r : radians) {
        out.push_back(Angle::from_radians(r));
    }
    return out;
}

std::vector<double> to_radians(std::span<const Angle> series) {
    std::vector<double> out;
    out.reserve(series.size());
    for (Angle a : series) {
        out.push_back(a.value());
    }
    return out;
}

RngSeed RngSeed::child(std::string_view tag, std::uint64_t index) const noexcept {
    std::uint64_t h = splitmix64(stream ^ fnv1a(tag));
    h = splitmix64(h ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    return RngSeed{master, h};
}

Rng::Rng(RngSeed seed)
    : engine_(splitmix64(seed.master ^ splitmix64(seed.stream + 0x2545f4914f6cdd1dULL))) {}

double Rng::uniform01() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open01() noexcept {
    return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
}

double Rng::standard_normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    // Marsaglia polar method.
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * f;
    has_spare_ = true;
    return u * f;
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
    // Rejection to avoid modulo bias.
    const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - (~std::uint64_t{0} % bound));
    std::uint64_t x = 0;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double draw_von_mises(Rng& rng, double mu, double kappa) {
    if (kappa < 1e-8) {
        return Angle::from_radians(rng.uniform_angle()).value();
    }
    if (kappa > 1e6) {
        // Wrapped normal limit; the rejection constants lose precision here.
        return Angle::from_radians(mu + rng.standard_normal() / std::sqrt(kappa)).value();
    }
    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    const double r = (1.0 + rho * rho) / (2.0 * rho);
    double f = 0.0;
    for (;;) {
        const double u1 = rng.uniform01();
        const double u2 = rng.uniform_open01();
        const double z = std::cos(std::numbers::pi * u1);
        f = (1.0 + r * z) / (r + z);
        const double c = kappa * (r - f);
        if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
            break;
        }
    }
    f = std::clamp(f, -1.0, 1.0);
    const double offset = rng.uniform01() < 0.5 ? -std::acos(f) : std::acos(f);
    return Angle::from_radians(mu + offset).value();
}

double draw_wrapped_cauchy(Rng& rng, double mu, double rho) {
    if (rho == 0.0) {
        return Angle::from_radians(rng.uniform_angle()).value();
    }
    // Linear Cauchy with scale -log(rho) wraps to resultant length rho.
    const double scale = -std::log(rho);
    const double x = mu + scale * std::tan(std::numbers::pi * (rng.uniform_open01() - 0.5));
    return Angle::from_radians(x).value();
}

namespace {

void require_count(std::size_t count) {
    if (count == 0) {
        throw InvalidInput("sample count must be positive");
    }
}

}  // namespace

AngleSeries sample_circular_uniform(RngSeed seed, std::size_t count) {
    require_count(count);
    Rng rng(seed);
    AngleSeries out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(Angle::from_radians(rng.uniform_angle()));
    }
    return out;
}

AngleSeries sample_von_mises(RngSeed seed, Angle mu, double kappa, std::size_t count) {
    require_count(count);
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
        throw InvalidInput("von Mises concentration must be finite and non-negative");
    }
    Rng rng(seed);
    AngleSeries out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(Angle::from_radians(draw_von_mises(rng, mu.value(), kappa)));
    }
    return out;
}

AngleSeries sample_wrapped_cauchy(RngSeed seed, Angle mu, double rho, std::size_t count) {
    require_count(count);
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw InvalidInput("wrapped Cauchy rho must lie in [0, 1)");
    }
    Rng rng(seed);
    AngleSeries out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(Angle::from_radians(draw_wrapped_cauchy(rng, mu.value(), rho)));
    }
    return out;
}

CircularMoments circular_moments(std::span<const Angle> series) {
    if (series.empty()) {
        throw InvalidInput("circular moments of an empty series");
    }
    double c = 0.0;
    double s = 0.0;
    for (Angle a : series) {
        c += std::cos(a.value());
        s += std::sin(a.value());
    }
    const auto n = static_cast<double>(series.size());
    return {std::hypot(c, s) / n, std::atan2(s, c)};
}

}  // namespace rcag
