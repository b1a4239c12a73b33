#include "rcag/theory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "rcag/errors.hpp"

namespace rcag {

double theoretical_degree_cdf(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw InvalidInput("degree CDF argument must lie in [0, 1]");
    }
    if (x <= 0.5) {
        return 0.0;
    }
    const double s = std::sqrt(2.0 * (1.0 - x));
    const double f = 2.5 - 2.0 * s - x - 0.5 * (1.0 - s) * (1.0 - s);
    return std::clamp(f, 0.0, 1.0);
}

DegreeLaw theoretical_degree_pmf(std::size_t n) {
    if (n < 2) {
        throw InvalidInput("degree law needs n >= 2");
    }
    DegreeLaw law;
    law.n = n;
    law.pmf.resize(n);
    const auto nd = static_cast<double>(n);
    double prev = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double cur = i == n ? 1.0 : theoretical_degree_cdf(static_cast<double>(i) / nd);
        law.pmf[i - 1] = cur - prev;
        prev = cur;
    }
    return law;
}

double fixed_arc_non_intersection_prob(const Arc& arc) noexcept {
    const double gap = 1.0 - arc.length() / kTwoPi;
    return 0.5 * gap * gap;
}

double arc_length_cdf_uniform(double x) {
    if (!(x >= 0.0 && x <= kTwoPi)) {
        throw InvalidInput("arc length must lie in [0, 2pi]");
    }
    return x / kTwoPi;
}

double degree_cdf_distance(std::span<const std::uint32_t> degrees) {
    if (degrees.empty()) {
        throw InvalidInput("degree sequence is empty");
    }
    std::vector<std::uint32_t> d(degrees.begin(), degrees.end());
    std::sort(d.begin(), d.end());
    const auto n = static_cast<double>(d.size());
    // F_hat is a step function; F* is continuous, so the supremum is
    // attained at a jump, approached from either side.
    double sup = 0.0;
    std::size_t below = 0;
    for (std::size_t k = 0; k < d.size();) {
        std::size_t next = k;
        while (next < d.size() && d[next] == d[k]) {
            ++next;
        }
        const double x = std::min(1.0, static_cast<double>(d[k]) / n);
        const double f = theoretical_degree_cdf(x);
        sup = std::max(sup, std::abs(static_cast<double>(below) / n - f));
        sup = std::max(sup, std::abs(static_cast<double>(next) / n - f));
        below = next;
        k = next;
    }
    return sup;
}

Fraction reduced(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw InvalidInput("zero denominator");
    }
    const std::int64_t g = std::gcd(num, den);
    Fraction f{num / g, den / g};
    if (f.den < 0) {
        f.num = -f.num;
        f.den = -f.den;
    }
    return f;
}

bool disjoint_by_ordering(double t1, double p1, double t2, double p2) noexcept {
    return (t1 < p1 && p1 < t2 && t2 < p2) || (p2 < t1 && t1 < p1 && p1 < t2) ||
           (t2 < p2 && p2 < t1 && t1 < p1) || (p1 < t2 && t2 < p2 && p2 < t1);
}

OrderingOracle ordering_oracle() {
    OrderingOracle out;

    // Positions are a permutation of ranks; slot order is (t1, p1, t2, p2, ...).
    std::array<int, 4> four{0, 1, 2, 3};
    std::int64_t total4 = 0;
    do {
        ++total4;
        if (disjoint_by_ordering(four[0], four[1], four[2], four[3])) {
            ++out.pairwise_count;
        }
    } while (std::next_permutation(four.begin(), four.end()));

    std::array<int, 6> six{0, 1, 2, 3, 4, 5};
    std::int64_t total6 = 0;
    do {
        ++total6;
        if (disjoint_by_ordering(six[0], six[1], six[2], six[3]) &&
            disjoint_by_ordering(six[0], six[1], six[4], six[5])) {
            ++out.joint_count;
        }
    } while (std::next_permutation(six.begin(), six.end()));

    out.pairwise_non_edge = reduced(out.pairwise_count, total4);
    out.joint_non_edge = reduced(out.joint_count, total6);
    out.independence_product =
        reduced(out.pairwise_non_edge.num * out.pairwise_non_edge.num,
                out.pairwise_non_edge.den * out.pairwise_non_edge.den);
    return out;
}

}  // namespace rcag
