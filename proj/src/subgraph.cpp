#include "tspg/subgraph.hpp"

#include <algorithm>
#include <cassert>

namespace tspg {

EdgeSubgraph EdgeSubgraph::from_edge_ids(const TemporalGraph& base, std::vector<EdgeId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    assert(ids.empty() || ids.back() < base.edge_count());

    EdgeSubgraph s;
    s.base_ = &base;
    s.edge_ids_ = std::move(ids);

    const Vertex n = base.vertex_count();
    s.out_offsets_.assign(n + 1, 0);
    s.in_offsets_.assign(n + 1, 0);
    for (EdgeId id : s.edge_ids_) {
        const TemporalEdge& e = base.edge(id);
        ++s.out_offsets_[e.source + 1];
        ++s.in_offsets_[e.target + 1];
    }
    for (Vertex u = 0; u < n; ++u) {
        s.out_offsets_[u + 1] += s.out_offsets_[u];
        s.in_offsets_[u + 1] += s.in_offsets_[u];
    }
    s.out_entries_.resize(s.edge_ids_.size());
    s.in_entries_.resize(s.edge_ids_.size());

    std::vector<std::uint8_t> keep(base.edge_count(), 0);
    for (EdgeId id : s.edge_ids_) keep[id] = 1;
    std::vector<std::uint32_t> out_pos(s.out_offsets_.begin(), s.out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_pos(s.in_offsets_.begin(), s.in_offsets_.end() - 1);
    // Walking the base adjacency preserves its (tau, neighbor) order.
    for (Vertex u = 0; u < n; ++u) {
        for (const AdjEntry& a : base.out(u))
            if (keep[a.edge]) s.out_entries_[out_pos[u]++] = a;
        for (const AdjEntry& a : base.in(u))
            if (keep[a.edge]) s.in_entries_[in_pos[u]++] = a;
    }

    s.vertices_.reserve(s.edge_ids_.size() == 0 ? 0 : 2);
    for (Vertex u = 0; u < n; ++u)
        if (s.out_offsets_[u + 1] != s.out_offsets_[u] || s.in_offsets_[u + 1] != s.in_offsets_[u])
            s.vertices_.push_back(u);
    return s;
}

EdgeSubgraph EdgeSubgraph::whole(const TemporalGraph& base) {
    std::vector<EdgeId> ids(base.edge_count());
    for (EdgeId i = 0; i < base.edge_count(); ++i) ids[i] = i;
    return from_edge_ids(base, std::move(ids));
}

bool EdgeSubgraph::contains_edge(EdgeId id) const {
    return std::binary_search(edge_ids_.begin(), edge_ids_.end(), id);
}

bool EdgeSubgraph::contains_vertex(Vertex u) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), u);
}

bool EdgeSubgraph::subset_of(const EdgeSubgraph& other) const {
    return std::includes(other.edge_ids_.begin(), other.edge_ids_.end(), edge_ids_.begin(),
                         edge_ids_.end());
}

EdgeSubgraph project(const TemporalGraph& g, const Query& q) {
    validate_query(q, g.vertex_count());
    std::vector<EdgeId> ids;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        Timestamp tau = g.edge(id).time;
        if (q.tau_b <= tau && tau <= q.tau_e) ids.push_back(id);
    }
    return EdgeSubgraph::from_edge_ids(g, std::move(ids));
}

}  // namespace tspg
