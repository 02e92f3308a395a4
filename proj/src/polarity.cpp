#include "tspg/polarity.hpp"

#include <ostream>

#include "tspg/detail/relax.hpp"

namespace tspg {

PolarityTimes compute_polarity(const TemporalGraph& g, const Query& q, PolarityStats* stats) {
    validate_query(q, g.vertex_count());
    PolarityTimes pt;
    detail::RelaxParams fwd{q.s, q.t, q.tau_b, q.tau_e};
    detail::relax_pass<true, true>(g, fwd, pt.arrival, pt.arrival_reached,
                                   stats ? &stats->forward_advancement : nullptr);
    detail::RelaxParams bwd{q.t, q.s, q.tau_b, q.tau_e};
    detail::relax_pass<false, true>(g, bwd, pt.departure, pt.departure_reached,
                                    stats ? &stats->backward_advancement : nullptr);
    return pt;
}

void dump_polarity(const TemporalGraph& g, const PolarityTimes& pt, std::ostream& out) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        out << g.external_id(u) << ' ';
        if (pt.arrival_reached[u])
            out << pt.arrival[u];
        else
            out << '-';
        out << ' ';
        if (pt.departure_reached[u])
            out << pt.departure[u];
        else
            out << '-';
        out << '\n';
    }
}

}  // namespace tspg
