#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tspg/subgraph.hpp"
#include "tspg/types.hpp"

namespace tspg {

using Deadline = std::chrono::steady_clock::time_point;

// Why each Gt edge ended up in (or out of) the tspG.
enum class EevRule : std::uint8_t {
    undecided,
    endpoint,  // s-out / t-in edge
    witness,   // one-hop witness through s or t
    path,      // lies on a path found by bidir_search
    batch,     // parallel replacement inside a found path's window
    rejected,  // exhaustive search found no hosting path
};

// Mutable state of one bidirectional search: the visited set (endpoints of
// edges currently stacked), the edge stack in discovery order (seed first),
// and the two completion flags.
struct SearchState {
    std::vector<std::uint8_t> visited;  // by base vertex id
    std::vector<EdgeId> path_edges;
    bool found_fwd = false;
    bool found_bwd = false;
    std::size_t max_stack = 0;      // deepest edge stack seen
    std::uint64_t expansions = 0;   // frames entered
    const Deadline* deadline = nullptr;
    bool timed_out = false;
};

// Exhaustive bidirectional DFS for a temporal simple path s -> ... -> seed ->
// ... -> t in gt. Returns the path's edges sorted by timestamp, or nullopt as
// a proof that no such path exists. Direction priority: forward first iff
// tau - tau_b > tau_e - tau. Forward explores out-neighbors in non-ascending
// temporal order, backward in-neighbors in non-descending order.
std::optional<std::vector<EdgeId>> bidir_search(const EdgeSubgraph& gt, const Query& q,
                                                EdgeId seed, SearchState& state);

struct EevStats {
    std::uint64_t rule_confirmed = 0;
    std::uint64_t searches = 0;
    std::uint64_t paths_found = 0;
    std::uint64_t batch_confirmed = 0;
    std::size_t max_stack = 0;
};

struct EevOptions {
    const Deadline* deadline = nullptr;
    // When set, receives the per-edge confirmation rule (indexed by base edge
    // id) and, for batch soundness checks, each (host path, window edge) pair.
    std::vector<EevRule>* trace = nullptr;
    std::vector<std::pair<std::vector<EdgeId>, EdgeId>>* batch_log = nullptr;
};

struct EevResult {
    EdgeSubgraph tspg;
    bool timed_out = false;
    EevStats stats;
};

// Escaped edges verification: cheap rules first (s/t incidence and
// one-hop witnesses), then one exhaustive bidirectional search per remaining
// unverified edge, confirming the found path's edges and their in-window
// parallels in batch.
EevResult eev(const EdgeSubgraph& gt, const Query& q, const EevOptions& opts = {});

// Replacement window for the i-th edge (0-based) of a path, with
// virtual boundaries tau_b - 1 and tau_e + 1: a parallel edge with timestamp
// strictly inside (lo, hi) may replace it.
std::pair<Timestamp, Timestamp> replacement_window(const TemporalGraph& g,
                                                   std::span<const EdgeId> path, std::size_t i,
                                                   const Query& q);

}  // namespace tspg
