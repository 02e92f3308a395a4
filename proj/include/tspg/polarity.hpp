#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tspg/temporal_graph.hpp"
#include "tspg/types.hpp"

namespace tspg {

// Per-vertex polarity times for one query. arrival[u] is the earliest last-edge
// timestamp over temporal walks s -> u inside [tau_b, tau_e] that avoid t;
// departure[u] the latest first-edge timestamp over walks u -> t avoiding s.
// Sentinels: arrival[s] = tau_b - 1, departure[t] = tau_e + 1. Unreached is a
// distinguished state, not a numeric infinity: an unreached arrival compares
// greater than any timestamp, an unreached departure less.
struct PolarityTimes {
    std::vector<Timestamp> arrival;
    std::vector<Timestamp> departure;
    std::vector<std::uint8_t> arrival_reached;
    std::vector<std::uint8_t> departure_reached;

    bool arrival_before(Vertex u, Timestamp tau) const {
        return arrival_reached[u] && arrival[u] < tau;
    }
    bool departure_after(Vertex u, Timestamp tau) const {
        return departure_reached[u] && departure[u] > tau;
    }
    std::optional<Timestamp> arrival_of(Vertex u) const {
        if (!arrival_reached[u]) return std::nullopt;
        return arrival[u];
    }
    std::optional<Timestamp> departure_of(Vertex u) const {
        if (!departure_reached[u]) return std::nullopt;
        return departure[u];
    }
};

struct PolarityStats {
    std::uint64_t forward_advancement = 0;   // out-adjacency entries consumed
    std::uint64_t backward_advancement = 0;  // in-adjacency entries consumed
};

PolarityTimes compute_polarity(const TemporalGraph& g, const Query& q,
                               PolarityStats* stats = nullptr);

// Debug dump, one "u A(u) D(u)" line per vertex (external ids, '-' unreached).
void dump_polarity(const TemporalGraph& g, const PolarityTimes& pt, std::ostream& out);

}  // namespace tspg
