#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "rcag/arc_graph.hpp"
#include "rcag/errors.hpp"
#include "rcag/theory.hpp"
#include "support.hpp"

using namespace rcag;

namespace {

Arc arc(double a, double b) { return make_arc(Angle::from_radians(a), Angle::from_radians(b)); }

}  // namespace

TEST_CASE("make_arc lengths") {
    CHECK(arc(1, 2).length() == doctest::Approx(1.0));
    CHECK(arc(4, 3).length() == doctest::Approx(kTwoPi - 1.0));
    CHECK(arc(0.7, 0.7).length() == 0.0);
}

TEST_CASE("arc_contains") {
    CHECK(arc_contains(arc(1, 2), Angle::from_radians(1.5)));
    CHECK(arc_contains(arc(4, 3), Angle::from_radians(0.5)));
    CHECK_FALSE(arc_contains(arc(1, 2), Angle::from_radians(3)));
    CHECK(arc_contains(arc(1, 2), Angle::from_radians(1)));
    CHECK(arc_contains(arc(1, 2), Angle::from_radians(2)));
    CHECK(arc_contains(arc(0.7, 0.7), Angle::from_radians(0.7)));
}

TEST_CASE("arcs_intersect") {
    CHECK_FALSE(arcs_intersect(arc(1, 2), arc(3, 4)));
    CHECK(arcs_intersect(arc(1, 2), arc(4, 3)));
    CHECK(arcs_intersect(arc(1, 2), arc(1, 2)));
    // Touching endpoints count as intersecting.
    CHECK(arcs_intersect(arc(1, 2), arc(2, 3)));
    // Point arcs meet arcs that contain them.
    CHECK(arcs_intersect(arc(1.5, 1.5), arc(1, 2)));
    CHECK_FALSE(arcs_intersect(arc(2.5, 2.5), arc(1, 2)));
}

TEST_CASE("build_rcag small cases") {
    const double s1[] = {1, 2, 3, 4};
    const auto g1 = build_rcag(make_series(s1));
    CHECK(g1.n() == 2);
    CHECK(g1.edge_count == 0);
    CHECK(g1.degrees == std::vector<std::uint32_t>{0, 0});
    const auto st = graph_stats(g1);
    CHECK(st.edge_count == 0);
    CHECK_FALSE(st.connected);

    const double s2[] = {1, 2, 4, 3};
    const auto g2 = build_rcag(make_series(s2));
    CHECK(g2.edge_count == 1);
    CHECK(g2.degrees == std::vector<std::uint32_t>{1, 1});
    CHECK(graph_stats(g2).connected);

    const double odd[] = {1, 2, 3};
    CHECK_THROWS_AS((void)build_rcag(make_series(odd)), InvalidInput);
    const double tiny[] = {1, 2};
    CHECK_THROWS_AS((void)build_rcag(make_series(tiny)), InvalidInput);
}

TEST_CASE("worked example arcs") {
    const auto& v = testing::worked_example_values();
    const auto g = build_rcag(make_series(v));
    REQUIRE(g.n() == 10);
    for (std::size_t j = 0; j < 10; ++j) {
        CHECK(g.arcs[j].start.value() == doctest::Approx(v[2 * j]));
        CHECK(g.arcs[j].end.value() == doctest::Approx(v[2 * j + 1]));
    }
    // A1 = [2.17, 6.12] and A10 = [0.54, 0.27]: A10 wraps through 0 and
    // covers everything except (0.27, 0.54), so it meets A1.
    CHECK(arcs_intersect(g.arcs[0], g.arcs[9]));
    CHECK_FALSE(arcs_intersect(g.arcs[4], g.arcs[5]));
    const auto sum = std::accumulate(g.degrees.begin(), g.degrees.end(), std::uint64_t{0});
    CHECK(sum == 2 * g.edge_count);
}

TEST_CASE("sweep agrees with brute force") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto series = sample_circular_uniform({s, 9}, 2 * (5 + s * 7));
        const auto g = build_rcag(series);
        const auto adj = adjacency(g);
        std::uint64_t edges = 0;
        for (std::size_t i = 0; i < g.n(); ++i) {
            std::uint32_t deg = 0;
            for (std::size_t j = 0; j < g.n(); ++j) {
                if (i != j && arcs_intersect(g.arcs[i], g.arcs[j])) {
                    ++deg;
                    edges += j > i ? 1 : 0;
                }
            }
            REQUIRE(deg == g.degrees[i]);
            REQUIRE(adj[i].size() == deg);
        }
        REQUIRE(edges == g.edge_count);
    }
}

TEST_CASE("symmetry and ordering-oracle equivalence") {
    Rng rng({2024, 0});
    std::size_t violations = 0;
    for (int i = 0; i < 100000; ++i) {
        std::array<double, 4> x{};
        for (auto& v : x) {
            v = rng.uniform_angle();
        }
        const Arc a = arc(x[0], x[1]);
        const Arc b = arc(x[2], x[3]);
        const bool ab = arcs_intersect(a, b);
        violations += ab != arcs_intersect(b, a) ? 1 : 0;
        violations += ab == disjoint_by_ordering(x[0], x[1], x[2], x[3]) ? 1 : 0;
    }
    CHECK(violations == 0);
}

TEST_CASE("all 24 orderings of four values") {
    std::array<double, 4> ranks{0.5, 1.5, 2.5, 3.5};
    std::size_t disjoint = 0;
    do {
        const bool d = !arcs_intersect(arc(ranks[0], ranks[1]), arc(ranks[2], ranks[3]));
        CHECK(d == disjoint_by_ordering(ranks[0], ranks[1], ranks[2], ranks[3]));
        disjoint += d ? 1 : 0;
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    CHECK(disjoint == 4);
}

TEST_CASE("edge probability is distribution free") {
    constexpr std::size_t pairs = 1000000;
    auto freq = [&](const AngleSeries& s) {
        std::size_t hit = 0;
        for (std::size_t i = 0; i < pairs; ++i) {
            hit += arcs_intersect(make_arc(s[4 * i], s[4 * i + 1]), make_arc(s[4 * i + 2], s[4 * i + 3])) ? 1 : 0;
        }
        return static_cast<double>(hit) / pairs;
    };
    CHECK(std::abs(freq(sample_circular_uniform({1, 1}, 4 * pairs)) - kEdgeProbability) < 0.0015);
    CHECK(std::abs(freq(sample_von_mises({1, 2}, Angle{}, 2.0, 4 * pairs)) - kEdgeProbability) < 0.0015);
    CHECK(std::abs(freq(sample_wrapped_cauchy({1, 3}, Angle{}, 0.5, 4 * pairs)) - kEdgeProbability) < 0.0015);
}

TEST_CASE("structural properties at n = 1000") {
    int max_ok = 0;
    int min_ok = 0;
    int connected = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto g = build_rcag(sample_circular_uniform({s, 77}, 2000));
        const auto st = graph_stats(g);
        max_ok += st.max_degree == 999 ? 1 : 0;
        min_ok += st.min_degree >= 450 ? 1 : 0;
        connected += st.connected ? 1 : 0;
        REQUIRE(std::accumulate(g.degrees.begin(), g.degrees.end(), std::uint64_t{0}) == 2 * g.edge_count);
        REQUIRE(st.min_degree <= st.max_degree);
    }
    CHECK(max_ok >= 99);
    CHECK(connected >= 99);
    CHECK(min_ok >= 99);
}

TEST_CASE("edge count concentration at n = 2000") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto g = build_rcag(sample_circular_uniform({s, 78}, 4000));
        const double n = 2000.0;
        const double expected = kEdgeProbability * n * (n - 1) / 2.0;
        REQUIRE(std::abs(static_cast<double>(g.edge_count) - expected) < std::pow(n, 1.75));
    }
}
