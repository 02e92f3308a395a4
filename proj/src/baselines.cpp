#include "tspg/baselines.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "tspg/detail/relax.hpp"

namespace tspg {

EdgeSubgraph es_tsg(const TemporalGraph& g, const Query& q) {
    validate_query(q, g.vertex_count());
    std::vector<Timestamp> fmin, bmax;
    std::vector<std::uint8_t> freach, breach;
    detail::RelaxParams fwd{q.s, kNoVertex, q.tau_b, q.tau_e};
    detail::relax_pass<true, false>(g, fwd, fmin, freach);
    detail::RelaxParams bwd{q.t, kNoVertex, q.tau_b, q.tau_e};
    detail::relax_pass<false, false>(g, bwd, bmax, breach);

    std::vector<EdgeId> ids;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const TemporalEdge& e = g.edge(id);
        if (freach[e.source] && fmin[e.source] <= e.time && breach[e.target] &&
            e.time <= bmax[e.target])
            ids.push_back(id);
    }
    return EdgeSubgraph::from_edge_ids(g, std::move(ids));
}

namespace {

// Temporal Dijkstra: strict ascending relaxation with a priority queue and
// lazy deletion. `Forward` minimizes arrival from src avoiding `avoid`;
// otherwise maximizes departure.
template <bool Forward>
void dijkstra_pass(const TemporalGraph& g, Vertex src, Vertex avoid, Timestamp tau_b,
                   Timestamp tau_e, std::vector<Timestamp>& value,
                   std::vector<std::uint8_t>& reached) {
    const Vertex n = g.vertex_count();
    value.assign(n, 0);
    reached.assign(n, 0);
    value[src] = Forward ? tau_b - 1 : tau_e + 1;
    reached[src] = 1;

    using Item = std::pair<Timestamp, Vertex>;
    auto better = [](Timestamp a, Timestamp b) { return Forward ? a < b : a > b; };
    struct Cmp {
        bool operator()(const Item& a, const Item& b) const {
            return Forward ? a.first > b.first : a.first < b.first;
        }
    };
    std::priority_queue<Item, std::vector<Item>, Cmp> pq;
    pq.push({value[src], src});
    while (!pq.empty()) {
        auto [label, u] = pq.top();
        pq.pop();
        if (label != value[u]) continue;  // stale
        const auto adj = Forward ? g.out(u) : g.in(u);
        for (const AdjEntry& a : adj) {
            if (a.time < tau_b || a.time > tau_e) continue;
            if (a.neighbor == avoid) continue;
            const bool extends = Forward ? a.time > label : a.time < label;
            if (!extends) continue;
            if (!reached[a.neighbor] || better(a.time, value[a.neighbor])) {
                value[a.neighbor] = a.time;
                reached[a.neighbor] = 1;
                pq.push({a.time, a.neighbor});
            }
        }
    }
}

}  // namespace

EdgeSubgraph tg_tsg(const TemporalGraph& g, const Query& q) {
    validate_query(q, g.vertex_count());
    std::vector<Timestamp> arrival, departure;
    std::vector<std::uint8_t> areach, dreach;
    dijkstra_pass<true>(g, q.s, q.t, q.tau_b, q.tau_e, arrival, areach);
    dijkstra_pass<false>(g, q.t, q.s, q.tau_b, q.tau_e, departure, dreach);

    std::vector<EdgeId> ids;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const TemporalEdge& e = g.edge(id);
        if (areach[e.source] && arrival[e.source] < e.time && dreach[e.target] &&
            e.time < departure[e.target])
            ids.push_back(id);
    }
    return EdgeSubgraph::from_edge_ids(g, std::move(ids));
}

namespace {

struct EnumContext {
    const EdgeSubgraph& graph;
    const Query& q;
    const EnumLimits& limits;
    const PathSink& sink;
    EnumResult result;
    std::vector<std::uint8_t> visited;
    std::vector<EdgeId> stack;
    std::uint64_t steps = 0;

    bool budget_exhausted() {
        if (limits.max_paths && result.path_count >= *limits.max_paths) return true;
        if (limits.deadline && (++steps & 4095u) == 0 &&
            std::chrono::steady_clock::now() > *limits.deadline)
            return true;
        return false;
    }

    // Returns false to abort the whole enumeration.
    bool dfs(Vertex u, Timestamp last) {
        if (u == q.t) {
            ++result.path_count;
            if (sink) sink(stack);
            if (limits.max_paths && result.path_count >= *limits.max_paths) {
                result.truncated = true;
                return false;
            }
            return true;
        }
        for (const AdjEntry& a : graph.out(u)) {
            if (a.time <= last) continue;
            if (a.time > q.tau_e) break;
            if (visited[a.neighbor]) continue;
            if (budget_exhausted()) {
                result.truncated = true;
                return false;
            }
            visited[a.neighbor] = 1;
            stack.push_back(a.edge);
            const bool keep_going = dfs(a.neighbor, a.time);
            stack.pop_back();
            visited[a.neighbor] = 0;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

EnumResult enumerate_tsp(const EdgeSubgraph& graph, const Query& q, const EnumLimits& limits,
                         const PathSink& sink) {
    validate_query(q, graph.base().vertex_count());
    EnumContext ctx{graph, q, limits, sink, {}, {}, {}, 0};
    ctx.visited.assign(graph.base().vertex_count(), 0);
    ctx.visited[q.s] = 1;
    ctx.dfs(q.s, q.tau_b - 1);
    return ctx.result;
}

EnumeratedTspg build_tspg_by_enumeration(const EdgeSubgraph& ubg, const Query& q,
                                         const EnumLimits& limits) {
    std::vector<std::uint8_t> in_result(ubg.base().edge_count(), 0);
    EnumResult enumeration = enumerate_tsp(ubg, q, limits, [&](std::span<const EdgeId> path) {
        for (EdgeId id : path) in_result[id] = 1;
    });
    std::vector<EdgeId> ids;
    for (EdgeId id = 0; id < in_result.size(); ++id)
        if (in_result[id]) ids.push_back(id);
    return {EdgeSubgraph::from_edge_ids(ubg.base(), std::move(ids)), enumeration};
}

std::string format_path(const TemporalGraph& g, std::span<const EdgeId> path) {
    std::ostringstream out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const TemporalEdge& e = g.edge(path[i]);
        if (i == 0) out << g.external_id(e.source);
        out << " -" << e.time << "-> " << g.external_id(e.target);
    }
    return out.str();
}

}  // namespace tspg
