#pragma once

#include <span>
#include <vector>

#include "tspg/temporal_graph.hpp"
#include "tspg/types.hpp"

namespace tspg {

// Edge-subset view over a TemporalGraph with its own materialized adjacency.
// Edge ids refer to the base graph, so containment between stages (tspG ⊆ Gt
// ⊆ Gq ⊆ projection) is plain id-set inclusion. The vertex set is induced:
// exactly the endpoints of retained edges.
class EdgeSubgraph {
public:
    EdgeSubgraph() = default;

    // ids may arrive in any order; they are sorted into the base graph's
    // (tau, source, target) edge order, which is the non-descending timestamp
    // scan order every downstream stage relies on.
    static EdgeSubgraph from_edge_ids(const TemporalGraph& base, std::vector<EdgeId> ids);

    // The whole graph viewed as a subgraph of itself.
    static EdgeSubgraph whole(const TemporalGraph& base);

    const TemporalGraph& base() const { return *base_; }

    std::span<const EdgeId> edge_ids() const { return edge_ids_; }
    std::span<const Vertex> vertices() const { return vertices_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edge_ids_.size()); }
    std::size_t vertex_count() const { return vertices_.size(); }

    bool contains_edge(EdgeId id) const;
    bool contains_vertex(Vertex u) const;

    const TemporalEdge& edge(EdgeId id) const { return base_->edge(id); }

    // Adjacency restricted to retained edges, indexed by base vertex ids,
    // sorted ascending by (tau, neighbor).
    std::span<const AdjEntry> out(Vertex u) const {
        return {out_entries_.data() + out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]};
    }
    std::span<const AdjEntry> in(Vertex u) const {
        return {in_entries_.data() + in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]};
    }

    bool same_edge_set(const EdgeSubgraph& other) const { return edge_ids_ == other.edge_ids_; }
    bool subset_of(const EdgeSubgraph& other) const;

private:
    const TemporalGraph* base_ = nullptr;
    std::vector<EdgeId> edge_ids_;  // ascending
    std::vector<Vertex> vertices_;  // ascending, induced
    std::vector<std::uint32_t> out_offsets_{0};
    std::vector<std::uint32_t> in_offsets_{0};
    std::vector<AdjEntry> out_entries_;
    std::vector<AdjEntry> in_entries_;
};

// dtTSG: keep exactly the edges with tau_b <= tau <= tau_e.
EdgeSubgraph project(const TemporalGraph& g, const Query& q);

}  // namespace tspg
