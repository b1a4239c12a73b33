#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rcag/circular.hpp"

namespace rcag {

/// Closed arc swept anticlockwise from `start` to `end`.
/// start == end is a single point, not the full circle.
struct Arc {
    Angle start;
    Angle end;

    [[nodiscard]] double length() const noexcept {
        const double d = end.value() - start.value();
        return d < 0.0 ? d + kTwoPi : d;
    }
};

[[nodiscard]] Arc make_arc(Angle theta, Angle phi) noexcept;

/// True iff x lies on the arc; the endpoints belong to it.
[[nodiscard]] bool arc_contains(const Arc& arc, Angle x) noexcept;

/// Two arcs meet iff one contains the other's start point.
[[nodiscard]] bool arcs_intersect(const Arc& a, const Arc& b) noexcept;

/// Random circular arc graph over consecutive observation pairs.
///
/// Only degrees and the edge count are kept; the adjacency is rebuilt on
/// demand by graph_stats() because it is O(n^2) in memory.
struct Rcag {
    std::vector<Arc> arcs;
    std::vector<std::uint32_t> degrees;
    std::uint64_t edge_count = 0;

    [[nodiscard]] std::size_t n() const noexcept { return arcs.size(); }
};

/// Vertex j holds (series[2j], series[2j+1]). Requires even length >= 4.
[[nodiscard]] Rcag build_rcag(std::span<const Angle> series);

/// Same sweep over arcs that are already formed (any n >= 1).
[[nodiscard]] Rcag build_rcag_from_arcs(std::vector<Arc> arcs);

/// Pairs consecutive observations into arcs. Requires even length.
[[nodiscard]] std::vector<Arc> arcs_from_series(std::span<const Angle> series);

struct GraphStats {
    std::uint64_t edge_count = 0;
    std::uint32_t min_degree = 0;
    std::uint32_t max_degree = 0;
    bool connected = false;
};

[[nodiscard]] GraphStats graph_stats(const Rcag& g);

/// Adjacency lists, materialized for connectivity and small-graph checks.
[[nodiscard]] std::vector<std::vector<std::uint32_t>> adjacency(const Rcag& g);

}  // namespace rcag
