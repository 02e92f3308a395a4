#include "tspg/tight_ubg.hpp"

#include <cassert>

namespace tspg {

namespace {

bool disjoint(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            return false;
    }
    return true;
}

}  // namespace

EdgeSubgraph tight_ubg(const EdgeSubgraph& gq, const Query& q, const TcvTables& tables,
                       TightStats* stats) {
    const TemporalGraph& base = gq.base();
    validate_query(q, base.vertex_count());

    const Vertex n = base.vertex_count();
    std::vector<std::uint32_t> ps(n, 0);  // forward entry cursor, ascending times
    std::vector<std::uint32_t> pt(n, 0);  // backward entry cursor, descending times
    for (Vertex u : gq.vertices()) {
        const auto& bw = tables.backward[u];
        pt[u] = bw.size() == 0 ? 0 : static_cast<std::uint32_t>(bw.size() - 1);
    }

    std::vector<Vertex> scratch_u, scratch_v;
    std::vector<EdgeId> retained;
    for (EdgeId id : gq.edge_ids()) {
        const TemporalEdge& e = base.edge(id);
        if (e.source == q.s || e.target == q.t) {
            retained.push_back(id);
            continue;
        }
        // tau_l: largest in-timestamp of u strictly below tau. An internal Gq
        // edge always has one (its containing temporal path supplies it); a
        // missing side can only mean the input was not a Gq, and the edge is
        // excluded.
        const auto& fw = tables.forward[e.source];
        std::uint32_t i = ps[e.source];
        while (i < fw.size() && fw.times[i] < e.time) ++i;
        if (i == 0) {
            assert(!"internal Gq edge without a strictly earlier in-edge");
            continue;
        }
        --i;
        ps[e.source] = i;

        // tau_r: smallest out-timestamp of v strictly above tau (descending
        // table, so move toward index 0).
        const auto& bw = tables.backward[e.target];
        std::uint32_t j = pt[e.target];
        while (j > 0 && bw.times[j] <= e.time) --j;
        if (bw.size() == 0 || bw.times[j] <= e.time) {
            assert(!"internal Gq edge without a strictly later out-edge");
            continue;
        }
        pt[e.target] = j;

        std::span<const Vertex> su = tables.resolve(true, e.source, i, scratch_u);
        std::span<const Vertex> sv = tables.resolve(false, e.target, j, scratch_v);
        if (stats) ++stats->intersections;
        if (disjoint(su, sv)) retained.push_back(id);
    }
    return EdgeSubgraph::from_edge_ids(base, std::move(retained));
}

}  // namespace tspg
