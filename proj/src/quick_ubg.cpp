#include "tspg/quick_ubg.hpp"

namespace tspg {

EdgeSubgraph quick_ubg(const TemporalGraph& g, const Query& q, const PolarityTimes& pt) {
    validate_query(q, g.vertex_count());
    std::vector<EdgeId> ids;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const TemporalEdge& e = g.edge(id);
        if (pt.arrival_before(e.source, e.time) && pt.departure_after(e.target, e.time))
            ids.push_back(id);
    }
    return EdgeSubgraph::from_edge_ids(g, std::move(ids));
}

}  // namespace tspg
