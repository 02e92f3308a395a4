#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tspg/types.hpp"

namespace tspg {

// One adjacency slot: neighbor + timestamp + the id of the underlying edge.
struct AdjEntry {
    Vertex neighbor = 0;
    Timestamp time = 0;
    EdgeId edge = 0;
};

struct LoadOptions {
    // Pad the vertex count so ids 0..min_vertex_count-1 exist even if isolated.
    // Only meaningful for from_internal_edges-style synthetic inputs.
    Vertex min_vertex_count = 0;
};

struct LoadReport {
    std::uint64_t lines_read = 0;
    std::uint64_t edges_kept = 0;
    std::uint64_t duplicates_dropped = 0;
    std::uint64_t self_loops_dropped = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::uint64_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::uint64_t line() const { return line_; }

private:
    std::uint64_t line_;
};

// Immutable directed temporal multigraph. Edges are stored deduplicated in
// (tau, source, target) order; per-vertex adjacency is sorted ascending by
// (tau, neighbor). External ids map to dense internal indices 0..n-1.
class TemporalGraph {
public:
    TemporalGraph() = default;

    // Text loader: lines "u v tau", '#'/'%' comments. Duplicates and
    // self-loops are dropped and counted in the report.
    static TemporalGraph load_edge_list(std::istream& in, LoadReport* report = nullptr,
                                        const LoadOptions& options = {});

    // Builds from edges already carrying dense internal ids (generators,
    // tests). Applies the same dedupe / self-loop / sorting rules.
    static TemporalGraph from_internal_edges(Vertex vertex_count, std::vector<TemporalEdge> edges);

    Vertex vertex_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    const TemporalEdge& edge(EdgeId id) const { return edges_[id]; }
    std::span<const TemporalEdge> edges() const { return edges_; }

    std::span<const AdjEntry> out(Vertex u) const {
        return {out_entries_.data() + out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]};
    }
    std::span<const AdjEntry> in(Vertex u) const {
        return {in_entries_.data() + in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]};
    }

    std::int64_t external_id(Vertex u) const { return external_ids_[u]; }
    std::optional<Vertex> find_vertex(std::int64_t external) const;

    // Looks up the id of an exact (u, v, tau) triple, if present.
    std::optional<EdgeId> find_edge(Vertex u, Vertex v, Timestamp tau) const;

private:
    void build_adjacency();

    Vertex n_ = 0;
    std::vector<TemporalEdge> edges_;
    std::vector<std::uint32_t> out_offsets_{0};
    std::vector<std::uint32_t> in_offsets_{0};
    std::vector<AdjEntry> out_entries_;
    std::vector<AdjEntry> in_entries_;
    std::vector<std::int64_t> external_ids_;
    std::unordered_map<std::int64_t, Vertex> id_of_external_;
};

struct GraphStats {
    Vertex vertex_count = 0;
    EdgeId edge_count = 0;
    std::size_t distinct_timestamps = 0;
    std::size_t max_degree = 0;  // max over u of max(|N_in|, |N_out|)
    Timestamp min_time = 0;
    Timestamp max_time = 0;
};

GraphStats stats(const TemporalGraph& g);

// Canonical export: one "u v tau" line per edge, (tau, external u, external v)
// order. export then load reproduces the same edge multiset.
void export_edge_list(const TemporalGraph& g, std::ostream& out);

}  // namespace tspg
