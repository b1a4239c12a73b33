#include "rcag/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rcag/arc_graph.hpp"
#include "rcag/errors.hpp"
#include "rcag/parallel.hpp"
#include "rcag/randomness_tests.hpp"
#include "rcag/theory.hpp"

namespace rcag {

PowerReport run_power(const PowerConfig& config, const ThresholdTable& thresholds) {
    const auto start = std::chrono::steady_clock::now();
    const ProcessSpec spec = parse_process_spec(config.process);
    if (config.test != "ep" && config.test != "dd") {
        throw InvalidInput("power test must be 'ep' or 'dd', got '" + config.test + "'");
    }
    if (config.replicates == 0) {
        throw InvalidInput("replicate count must be positive");
    }
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw InvalidInput("significance level must lie in (0, 1)");
    }
    PowerReport report;
    report.process = config.process;
    report.m = config.m;
    report.replicates = config.replicates;
    report.alpha = config.alpha;
    report.test = config.test;
    report.seed = config.seed;

    if (config.test == "dd") {
        const auto [len, level] = dd_threshold_key(config.m, config.alpha);
        report.threshold_source = thresholds.at(len, level).source;
    } else if (config.m < 8) {
        throw InvalidInput("EP test needs at least 8 observations");
    }

    std::vector<std::uint8_t> rejected(config.replicates, 0);
    parallel_for(config.replicates, config.workers, [&](std::size_t r) {
        const AngleSeries series = generate(spec, config.m, config.seed.child("replicate", r));
        const TestOutcome out = config.test == "ep"
                                    ? ep_test(series, config.alpha, config.seed.child("test", r))
                                    : dd_test(series, config.alpha, thresholds);
        rejected[r] = rejects(out.decision) ? 1 : 0;
    });
    report.rejections = static_cast<std::size_t>(std::count(rejected.begin(), rejected.end(), 1));
    const double n = static_cast<double>(config.replicates);
    report.rejection_rate = static_cast<double>(report.rejections) / n;
    report.standard_error = std::sqrt(report.rejection_rate * (1.0 - report.rejection_rate) / n);
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool TheoryValidation::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

namespace {

constexpr std::size_t kChunk = 1 << 16;

Arc uniform_arc(Rng& rng) {
    const Angle a = Angle::from_radians(rng.uniform_angle());
    const Angle b = Angle::from_radians(rng.uniform_angle());
    return make_arc(a, b);
}

// Sums per-chunk counts so the total is independent of the worker count.
template <typename Fn>
std::size_t chunked_count(std::size_t draws, RngSeed seed, std::string_view tag, unsigned workers, Fn&& per_draw) {
    const std::size_t chunks = (draws + kChunk - 1) / kChunk;
    std::vector<std::size_t> counts(chunks, 0);
    parallel_for(chunks, workers, [&](std::size_t c) {
        Rng rng(seed.child(tag, c));
        const std::size_t size = std::min(kChunk, draws - c * kChunk);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < size; ++i) {
            hits += per_draw(rng) ? 1 : 0;
        }
        counts[c] = hits;
    });
    std::size_t total = 0;
    for (auto v : counts) {
        total += v;
    }
    return total;
}

PropertyCheck exact_check(std::string name, Fraction got, Fraction want) {
    PropertyCheck c;
    c.name = std::move(name);
    c.observed = got.value();
    c.expected = want.value();
    c.passed = got == want;
    c.detail = std::to_string(got.num) + "/" + std::to_string(got.den);
    return c;
}

PropertyCheck within(std::string name, double observed, double expected, double tolerance, std::string detail = {}) {
    PropertyCheck c;
    c.name = std::move(name);
    c.observed = observed;
    c.expected = expected;
    c.tolerance = tolerance;
    c.passed = std::abs(observed - expected) <= tolerance;
    c.detail = std::move(detail);
    return c;
}

}  // namespace

TheoryValidation validate_theory(RngSeed seed, std::size_t draws, unsigned workers) {
    if (draws < 1000) {
        throw InvalidInput("validate_theory needs at least 1000 draws");
    }
    TheoryValidation v;
    v.seed = seed;
    v.draws = draws;
    const double nd = static_cast<double>(draws);

    const OrderingOracle oracle = ordering_oracle();
    v.checks.push_back(exact_check("pairwise_non_edge_exact", oracle.pairwise_non_edge, {1, 6}));
    v.checks.push_back(exact_check("joint_non_edge_exact", oracle.joint_non_edge, {1, 20}));
    v.checks.push_back(exact_check("independence_product_exact", oracle.independence_product, {1, 36}));

    const std::size_t edges = chunked_count(draws, seed, "edge", workers, [](Rng& rng) {
        const Arc a = uniform_arc(rng);
        const Arc b = uniform_arc(rng);
        return arcs_intersect(a, b);
    });
    // About 4 standard errors: 0.0015 at the default 10^6 draws.
    const double edge_tol = 4.0 * std::sqrt(kEdgeProbability * kNonEdgeProbability / nd);
    v.checks.push_back(within("edge_probability", static_cast<double>(edges) / nd, kEdgeProbability, edge_tol,
                              std::to_string(edges) + " of " + std::to_string(draws) + " pairs"));

    const std::size_t joint = chunked_count(draws, seed, "joint", workers, [](Rng& rng) {
        const Arc a = uniform_arc(rng);
        const Arc b = uniform_arc(rng);
        const Arc c = uniform_arc(rng);
        return !arcs_intersect(a, b) && !arcs_intersect(a, c);
    });
    {
        const double p = 1.0 / 20.0;
        v.checks.push_back(within("joint_non_edge_probability", static_cast<double>(joint) / nd, p,
                                  4.0 * std::sqrt(p * (1.0 - p) / nd)));
    }

    // A fixed quarter-circle arc is missed by a uniform arc with
    // probability (1 - 1/4)^2 / 2.
    {
        const Arc fixed = make_arc(Angle::from_radians(0.0), Angle::from_radians(std::numbers::pi / 2.0));
        const double p = fixed_arc_non_intersection_prob(fixed);
        const std::size_t miss = chunked_count(draws, seed, "fixed", workers,
                                               [&](Rng& rng) { return !arcs_intersect(fixed, uniform_arc(rng)); });
        v.checks.push_back(within("fixed_arc_non_intersection", static_cast<double>(miss) / nd, p,
                                  4.0 * std::sqrt(p * (1.0 - p) / nd)));
    }

    // Arc-length law: Kolmogorov distance of a sample against x / 2pi. The
    // tolerance is the 0.1% asymptotic critical value.
    {
        const std::size_t count = std::min<std::size_t>(draws, 200'000);
        Rng rng(seed.child("length"));
        std::vector<double> lengths(count);
        for (auto& l : lengths) {
            l = uniform_arc(rng).length();
        }
        std::sort(lengths.begin(), lengths.end());
        double ks = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double f = arc_length_cdf_uniform(lengths[i]);
            ks = std::max({ks, std::abs(static_cast<double>(i + 1) / count - f),
                           std::abs(f - static_cast<double>(i) / count)});
        }
        v.checks.push_back(within("arc_length_cdf", ks, 0.0, 1.95 / std::sqrt(static_cast<double>(count)),
                                  "Kolmogorov distance over " + std::to_string(count) + " arcs"));
    }

    // Degree-law convergence at n = 2000 vertices.
    {
        constexpr std::size_t n = 2000;
        const auto uni = build_rcag(sample_circular_uniform(seed.child("degree", 0), 2 * n));
        v.checks.push_back(within("degree_cdf_uniform", degree_cdf_distance(uni.degrees), 0.0, 0.05,
                                  "Kolmogorov distance, n = 2000, circular uniform"));
        const auto vm = build_rcag(sample_von_mises(seed.child("degree", 1), Angle::from_radians(0.0), 2.0, 2 * n));
        v.checks.push_back(within("degree_cdf_von_mises", degree_cdf_distance(vm.degrees), 0.0, 0.05,
                                  "Kolmogorov distance, n = 2000, von Mises(0, 2)"));
    }

    // Extreme degrees at n = 1000: some arc meets every other one, none is isolated.
    {
        constexpr std::size_t n = 1000;
        const auto g = build_rcag(sample_circular_uniform(seed.child("extreme"), 2 * n));
        const GraphStats st = graph_stats(g);
        v.checks.push_back(within("max_degree", st.max_degree, n - 1, 0.0));
        PropertyCheck minc = within("min_degree_positive", st.min_degree, 1.0, 0.0);
        minc.passed = st.min_degree >= 1;
        minc.tolerance = 0.0;
        minc.detail = "observed minimum degree must be at least 1";
        v.checks.push_back(minc);
        PropertyCheck conn;
        conn.name = "connected";
        conn.observed = st.connected ? 1.0 : 0.0;
        conn.expected = 1.0;
        conn.passed = st.connected;
        v.checks.push_back(conn);
    }
    return v;
}

}  // namespace rcag
