#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "tspg/subgraph.hpp"
#include "tspg/types.hpp"

namespace tspg {

// esTSG baseline: keeps exactly the edges lying on some s -> t walk with
// non-decreasing timestamps inside the interval (note: non-strict comparator,
// unlike everything else here). Bidirectional marking passes, O(m).
EdgeSubgraph es_tsg(const TemporalGraph& g, const Query& q);

// tgTSG baseline: same edge set as quick_ubg by construction, but computed
// with an independent bidirectional Dijkstra (priority-queue relaxation) so
// the equivalence is a genuine cross-check and the speed gap measurable.
EdgeSubgraph tg_tsg(const TemporalGraph& g, const Query& q);

struct EnumLimits {
    std::optional<std::uint64_t> max_paths;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct EnumResult {
    std::uint64_t path_count = 0;
    bool truncated = false;  // limit or deadline hit; counts/sets are partial
};

// Yields every temporal simple path s -> t within the interval exactly once,
// in deterministic adjacency order, as edge-id sequences. The DFS is
// deliberately naive: timestamp and visited checks only, so it shares no
// pruning with the VUG pipeline it serves as the oracle for.
using PathSink = std::function<void(std::span<const EdgeId>)>;
EnumResult enumerate_tsp(const EdgeSubgraph& graph, const Query& q, const EnumLimits& limits = {},
                         const PathSink& sink = nullptr);

struct EnumeratedTspg {
    EdgeSubgraph tspg;
    EnumResult enumeration;
};

// Union of vertices/edges over all enumerated paths; instantiates the
// EPdtTSG / EPesTSG / EPtgTSG baselines depending on the upper-bound graph
// passed in. Truncation propagates and flags the result as partial.
EnumeratedTspg build_tspg_by_enumeration(const EdgeSubgraph& ubg, const Query& q,
                                         const EnumLimits& limits = {});

// "u0 -t1-> u1 -t2-> ... ul" with external ids.
std::string format_path(const TemporalGraph& g, std::span<const EdgeId> path);

}  // namespace tspg
