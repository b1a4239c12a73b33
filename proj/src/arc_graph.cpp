#include "rcag/arc_graph.hpp"

#include <algorithm>
#include <queue>

#include "rcag/errors.hpp"

namespace rcag {

namespace {

inline double ccw_offset(double from, double to) noexcept {
    const double d = to - from;
    return d < 0.0 ? d + kTwoPi : d;
}

}  // namespace

Arc make_arc(Angle theta, Angle phi) noexcept { return Arc{theta, phi}; }

bool arc_contains(const Arc& arc, Angle x) noexcept {
    return ccw_offset(arc.start.value(), x.value()) <= arc.length();
}

bool arcs_intersect(const Arc& a, const Arc& b) noexcept {
    return arc_contains(a, b.start) || arc_contains(b, a.start);
}

std::vector<Arc> arcs_from_series(std::span<const Angle> series) {
    if (series.size() % 2 != 0) {
        throw InvalidInput("arc construction needs an even number of observations, got " +
                           std::to_string(series.size()));
    }
    std::vector<Arc> arcs;
    arcs.reserve(series.size() / 2);
    for (std::size_t j = 0; j + 1 < series.size(); j += 2) {
        arcs.push_back(make_arc(series[j], series[j + 1]));
    }
    return arcs;
}

Rcag build_rcag(std::span<const Angle> series) {
    if (series.size() < 4 || series.size() % 2 != 0) {
        throw InvalidInput("RCAG needs an even number of observations >= 4, got " +
                           std::to_string(series.size()));
    }
    return build_rcag_from_arcs(arcs_from_series(series));
}

Rcag build_rcag_from_arcs(std::vector<Arc> arcs) {
    const std::size_t n = arcs.size();
    if (n == 0) {
        throw InvalidInput("RCAG needs at least one vertex");
    }
    // Structure-of-arrays keeps the inner loop vectorizable.
    std::vector<double> start(n);
    std::vector<double> len(n);
    for (std::size_t i = 0; i < n; ++i) {
        start[i] = arcs[i].start.value();
        len[i] = arcs[i].length();
    }
    std::vector<std::uint32_t> degree(n, 0);
    std::uint64_t edges = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double si = start[i];
        const double li = len[i];
        std::uint32_t di = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = ccw_offset(si, start[j]);
            const double dji = ccw_offset(start[j], si);
            const std::uint32_t hit = static_cast<std::uint32_t>((dij <= li) | (dji <= len[j]));
            di += hit;
            degree[j] += hit;
        }
        degree[i] += di;
        edges += di;
    }
    Rcag g;
    g.arcs = std::move(arcs);
    g.degrees = std::move(degree);
    g.edge_count = edges;
    return g;
}

std::vector<std::vector<std::uint32_t>> adjacency(const Rcag& g) {
    const std::size_t n = g.n();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        adj[i].reserve(g.degrees[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (arcs_intersect(g.arcs[i], g.arcs[j])) {
                adj[i].push_back(static_cast<std::uint32_t>(j));
                adj[j].push_back(static_cast<std::uint32_t>(i));
            }
        }
    }
    return adj;
}

GraphStats graph_stats(const Rcag& g) {
    if (g.n() == 0) {
        throw InvalidInput("graph statistics need at least one vertex");
    }
    GraphStats s;
    s.edge_count = g.edge_count;
    const auto [lo, hi] = std::minmax_element(g.degrees.begin(), g.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;

    // A vertex adjacent to everything already makes the graph connected.
    if (s.max_degree + 1 == g.n()) {
        s.connected = true;
        return s;
    }
    if (s.min_degree == 0 && g.n() > 1) {
        s.connected = false;
        return s;
    }
    const auto adj = adjacency(g);
    std::vector<char> seen(g.n(), 0);
    std::queue<std::uint32_t> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const auto v = frontier.front();
        frontier.pop();
        for (auto w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    s.connected = reached == g.n();
    return s;
}

}  // namespace rcag
