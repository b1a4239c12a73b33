#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rcag/arc_graph.hpp"

namespace rcag {

/// Edge probability of two arcs with i.i.d. continuous endpoints.
inline constexpr double kEdgeProbability = 5.0 / 6.0;
inline constexpr double kNonEdgeProbability = 1.0 / 6.0;

/// Limiting CDF of degree/n for a vertex of a large RCAG. Zero on [0, 1/2].
[[nodiscard]] double theoretical_degree_cdf(double x);

/// Degree pmf over i = 1..n (pmf[i-1] is the mass at degree i).
struct DegreeLaw {
    std::size_t n = 0;
    std::vector<double> pmf;
};

/// f*(i) = F*(i/n) - F*((i-1)/n). Requires n >= 2.
[[nodiscard]] DegreeLaw theoretical_degree_pmf(std::size_t n);

/// Probability that a uniform random arc misses `arc`: (1 - L/2pi)^2 / 2.
[[nodiscard]] double fixed_arc_non_intersection_prob(const Arc& arc) noexcept;

/// P(|A| <= x) for an arc with uniform endpoints, x in [0, 2pi].
[[nodiscard]] double arc_length_cdf_uniform(double x);

/// sup_x |F_hat(x) - F*(x)| where F_hat(x) = #{d_j <= x n} / n.
[[nodiscard]] double degree_cdf_distance(std::span<const std::uint32_t> degrees);

struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
};

[[nodiscard]] Fraction reduced(std::int64_t num, std::int64_t den);

/// Exact non-intersection probabilities obtained by enumerating every
/// ordering of the arc endpoints.
struct OrderingOracle {
    Fraction pairwise_non_edge;     ///< P(X12 = 0) over 4! orderings
    Fraction joint_non_edge;        ///< P(X12 = 0, X13 = 0) over 6! orderings
    Fraction independence_product;  ///< P(X12 = 0) * P(X13 = 0)
    std::int64_t pairwise_count = 0;
    std::int64_t joint_count = 0;
};

[[nodiscard]] OrderingOracle ordering_oracle();

/// The four linear orderings under which [t1,p1] and [t2,p2] are disjoint:
/// t1<p1<t2<p2, p2<t1<p1<t2, t2<p2<t1<p1, p1<t2<p2<t1.
[[nodiscard]] bool disjoint_by_ordering(double t1, double p1, double t2, double p2) noexcept;

}  // namespace rcag
