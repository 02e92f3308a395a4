#pragma once

#include <vector>

#include "tspg/temporal_graph.hpp"
#include "tspg/types.hpp"

namespace tspg::testing {

// The running-example graph. Internal == external ids here.
namespace re {
inline constexpr Vertex s = 0, a = 1, b = 2, c = 3, d = 4, e = 5, f = 6, t = 7;

inline TemporalGraph graph() {
    std::vector<TemporalEdge> edges{
        {s, b, 2}, {s, a, 3}, {s, d, 4}, {b, c, 3}, {b, d, 3}, {b, t, 6}, {b, f, 5},
        {c, f, 4}, {c, t, 7}, {f, e, 5}, {f, b, 5}, {e, c, 6}, {a, d, 5}, {d, t, 2},
    };
    return TemporalGraph::from_internal_edges(8, std::move(edges));
}

inline Query query() { return Query{s, t, 2, 7}; }
}  // namespace re

}  // namespace tspg::testing
