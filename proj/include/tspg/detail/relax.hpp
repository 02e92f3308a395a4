#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "tspg/temporal_graph.hpp"
#include "tspg/types.hpp"

namespace tspg::detail {

struct RelaxParams {
    Vertex source = 0;
    Vertex avoid = kNoVertex;  // never relaxed into, never expanded
    Timestamp tau_b = 0;
    Timestamp tau_e = 0;
};

// Single-source label relaxation over timestamp-sorted adjacency, shared by
// the polarity computation (strict) and the esTSG marking passes (non-strict).
//
// Forward minimizes the arrival time over walks out of `source` whose edge
// timestamps ascend (Strict) or don't descend (!Strict) inside
// [tau_b, tau_e]; Backward mirrors it on in-adjacency, maximizing departure.
//
// Each vertex keeps a window boundary into its sorted adjacency. A pop with
// label w consumes exactly the entries whose timestamps became usable since
// the previous pop (labels improve monotonically, so the windows are
// disjoint), which keeps total advancement at most m per direction even when
// a label improves after the vertex was already popped and it re-enqueues.
template <bool Forward, bool Strict>
void relax_pass(const TemporalGraph& g, const RelaxParams& p, std::vector<Timestamp>& value,
                std::vector<std::uint8_t>& reached, std::uint64_t* advancement = nullptr) {
    const Vertex n = g.vertex_count();
    value.assign(n, 0);
    reached.assign(n, 0);

    constexpr std::uint32_t kUninit = 0xffffffffu;
    std::vector<std::uint32_t> boundary(n, kUninit);
    std::vector<std::uint8_t> in_queue(n, 0);
    std::deque<Vertex> queue;

    if constexpr (Forward)
        value[p.source] = Strict ? p.tau_b - 1 : p.tau_b;
    else
        value[p.source] = Strict ? p.tau_e + 1 : p.tau_e;
    reached[p.source] = 1;
    queue.push_back(p.source);
    in_queue[p.source] = 1;

    std::uint64_t consumed = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        in_queue[u] = 0;
        const Timestamp w = value[u];
        const std::span<const AdjEntry> adj = Forward ? g.out(u) : g.in(u);

        auto relax_entry = [&](const AdjEntry& a) {
            ++consumed;
            if (a.neighbor == p.avoid) return;
            const Vertex v = a.neighbor;
            bool improves;
            if constexpr (Forward)
                improves = !reached[v] || a.time < value[v];
            else
                improves = !reached[v] || a.time > value[v];
            if (!improves) return;
            value[v] = a.time;
            reached[v] = 1;
            // At the interval end no strict continuation exists, so skip the
            // re-enqueue (the label itself still matters for edge tests).
            const bool dead_end = Strict && a.time == (Forward ? p.tau_e : p.tau_b);
            if (!dead_end && !in_queue[v]) {
                queue.push_back(v);
                in_queue[v] = 1;
            }
        };

        if constexpr (Forward) {
            if (boundary[u] == kUninit) {
                auto it = std::upper_bound(adj.begin(), adj.end(), p.tau_e,
                                           [](Timestamp t, const AdjEntry& a) { return t < a.time; });
                boundary[u] = static_cast<std::uint32_t>(it - adj.begin());
            }
            std::uint32_t pos = boundary[u];
            while (pos > 0) {
                const AdjEntry& a = adj[pos - 1];
                const bool usable = Strict ? a.time > w : a.time >= w;
                if (!usable) break;
                --pos;
                relax_entry(a);
            }
            boundary[u] = pos;
        } else {
            if (boundary[u] == kUninit) {
                auto it = std::lower_bound(adj.begin(), adj.end(), p.tau_b,
                                           [](const AdjEntry& a, Timestamp t) { return a.time < t; });
                boundary[u] = static_cast<std::uint32_t>(it - adj.begin());
            }
            std::uint32_t pos = boundary[u];
            while (pos < adj.size()) {
                const AdjEntry& a = adj[pos];
                const bool usable = Strict ? a.time < w : a.time <= w;
                if (!usable) break;
                ++pos;
                relax_entry(a);
            }
            boundary[u] = pos;
        }
    }
    if (advancement) *advancement += consumed;
}

}  // namespace tspg::detail
