#include "oracle.hpp"

#include <algorithm>

#include "tspg/generators.hpp"

namespace tspg::testing {

namespace {

void min_update(std::optional<Timestamp>& slot, Timestamp v) {
    if (!slot || v < *slot) slot = v;
}
void max_update(std::optional<Timestamp>& slot, Timestamp v) {
    if (!slot || v > *slot) slot = v;
}

}  // namespace

WalkOracle walk_oracle(const TemporalGraph& g, const Query& q) {
    WalkOracle o;
    o.arrival.assign(g.vertex_count(), std::nullopt);
    o.departure.assign(g.vertex_count(), std::nullopt);
    o.on_st_walk.assign(g.edge_count(), 0);
    o.arrival[q.s] = q.tau_b - 1;
    o.departure[q.t] = q.tau_e + 1;

    std::vector<EdgeId> stack;
    // Walks may revisit intermediate vertices freely; strictly ascending
    // timestamps bound the depth by theta.
    std::function<void(Vertex, Timestamp)> forward = [&](Vertex u, Timestamp last) {
        for (const AdjEntry& a : g.out(u)) {
            if (a.time <= last || a.time > q.tau_e) continue;
            if (a.neighbor == q.s) continue;
            if (a.neighbor == q.t) {
                stack.push_back(a.edge);
                for (EdgeId id : stack) o.on_st_walk[id] = 1;
                stack.pop_back();
                continue;
            }
            min_update(o.arrival[a.neighbor], a.time);
            stack.push_back(a.edge);
            forward(a.neighbor, a.time);
            stack.pop_back();
        }
    };
    forward(q.s, q.tau_b - 1);

    std::function<void(Vertex, Timestamp)> backward = [&](Vertex u, Timestamp first) {
        for (const AdjEntry& a : g.in(u)) {
            if (a.time >= first || a.time < q.tau_b) continue;
            if (a.neighbor == q.t || a.neighbor == q.s) continue;
            max_update(o.departure[a.neighbor], a.time);
            backward(a.neighbor, a.time);
        }
    };
    backward(q.t, q.tau_e + 1);
    return o;
}

std::vector<std::vector<EdgeId>> all_simple_paths(const EdgeSubgraph& g, const Query& q) {
    std::vector<std::vector<EdgeId>> paths;
    std::vector<std::uint8_t> used(g.base().vertex_count(), 0);
    std::vector<EdgeId> stack;
    used[q.s] = 1;
    std::function<void(Vertex, Timestamp)> go = [&](Vertex u, Timestamp last) {
        for (const AdjEntry& a : g.out(u)) {
            if (a.time <= last || a.time > q.tau_e) continue;
            if (used[a.neighbor]) continue;
            stack.push_back(a.edge);
            if (a.neighbor == q.t) {
                paths.push_back(stack);
            } else {
                used[a.neighbor] = 1;
                go(a.neighbor, a.time);
                used[a.neighbor] = 0;
            }
            stack.pop_back();
        }
    };
    go(q.s, q.tau_b - 1);
    return paths;
}

void for_each_forward_prefix(const EdgeSubgraph& g, const Query& q, const PrefixSink& sink) {
    std::vector<std::uint8_t> used(g.base().vertex_count(), 0);
    std::vector<Vertex> members{q.s};
    used[q.s] = 1;
    std::function<void(Vertex, Timestamp)> go = [&](Vertex u, Timestamp last) {
        for (const AdjEntry& a : g.out(u)) {
            if (a.time <= last || a.time > q.tau_e) continue;
            if (a.neighbor == q.t || used[a.neighbor]) continue;
            used[a.neighbor] = 1;
            members.push_back(a.neighbor);
            sink(a.neighbor, a.time, members);
            go(a.neighbor, a.time);
            members.pop_back();
            used[a.neighbor] = 0;
        }
    };
    go(q.s, q.tau_b - 1);
}

void for_each_backward_suffix(const EdgeSubgraph& g, const Query& q, const PrefixSink& sink) {
    std::vector<std::uint8_t> used(g.base().vertex_count(), 0);
    std::vector<Vertex> members{q.t};
    used[q.t] = 1;
    std::function<void(Vertex, Timestamp)> go = [&](Vertex u, Timestamp first) {
        for (const AdjEntry& a : g.in(u)) {
            if (a.time >= first || a.time < q.tau_b) continue;
            if (a.neighbor == q.s || used[a.neighbor]) continue;
            used[a.neighbor] = 1;
            members.push_back(a.neighbor);
            sink(a.neighbor, a.time, members);
            go(a.neighbor, a.time);
            members.pop_back();
            used[a.neighbor] = 0;
        }
    };
    go(q.t, q.tau_e + 1);
}

bool is_temporal_simple_path(const TemporalGraph& g, const Query& q, std::span<const EdgeId> path,
                             std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (path.empty()) return fail("empty path");
    std::vector<Vertex> seen;
    Vertex at = q.s;
    Timestamp last = q.tau_b - 1;
    seen.push_back(q.s);
    for (EdgeId id : path) {
        if (id >= g.edge_count()) return fail("edge id out of range");
        const TemporalEdge& e = g.edge(id);
        if (e.source != at) return fail("edges do not chain");
        if (e.time <= last) return fail("timestamps not strictly ascending");
        if (e.time < q.tau_b || e.time > q.tau_e) return fail("timestamp outside interval");
        if (std::find(seen.begin(), seen.end(), e.target) != seen.end())
            return fail("repeated vertex");
        seen.push_back(e.target);
        at = e.target;
        last = e.time;
    }
    if (at != q.t) return fail("does not end at t");
    return true;
}

RandomInstance batching_instance(std::mt19937_64& rng) {
    const Vertex n = 8;
    std::vector<TemporalEdge> edges;
    std::vector<Vertex> chain{0, 2, 3, 4, 5, 1};  // s=0 ... t=1
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        edges.push_back({chain[i], chain[i + 1], static_cast<Timestamp>(2 * i + 2)});
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 1; i + 2 < chain.size(); ++i) {
        edges.push_back({chain[i], chain[i + 1], static_cast<Timestamp>(2 * i + 3)});
        if (coin(rng))
            edges.push_back({chain[i], chain[i + 1], static_cast<Timestamp>(2 * i + 1)});
    }
    std::uniform_int_distribution<Vertex> vd(0, n - 1);
    std::uniform_int_distribution<Timestamp> td(1, 12);
    for (int extra = 0; extra < 4; ++extra) {
        Vertex u = vd(rng), v = vd(rng);
        if (u != v) edges.push_back({u, v, td(rng)});
    }
    return {TemporalGraph::from_internal_edges(n, std::move(edges)), Query{0, 1, 1, 12}};
}

RandomInstance random_instance(std::mt19937_64& rng, Vertex max_n, EdgeId max_m,
                               Timestamp max_timestamps, Timestamp max_theta) {
    std::uniform_int_distribution<Vertex> nd(4, max_n);
    const Vertex n = nd(rng);
    std::uniform_int_distribution<Timestamp> td(2, max_timestamps);
    const Timestamp T = td(rng);
    const EdgeId cap = static_cast<EdgeId>(
        std::min<std::uint64_t>(max_m, static_cast<std::uint64_t>(n) * (n - 1) * T / 2));
    std::uniform_int_distribution<EdgeId> md(std::min<EdgeId>(n, cap), cap);
    const EdgeId m = md(rng);
    TemporalGraph g = gen_random(n, m, T, rng());

    std::uniform_int_distribution<Timestamp> theta_d(1, max_theta);
    const Timestamp theta = theta_d(rng);
    std::uniform_int_distribution<Timestamp> begin_d(1, std::max<Timestamp>(1, T - theta + 1));
    const Timestamp tau_b = begin_d(rng);
    std::uniform_int_distribution<Vertex> vd(0, n - 1);
    Vertex s = vd(rng), t = vd(rng);
    while (t == s) t = vd(rng);
    return {std::move(g), Query{s, t, tau_b, tau_b + theta - 1}};
}

}  // namespace tspg::testing
