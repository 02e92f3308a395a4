#pragma once

#include "tspg/subgraph.hpp"
#include "tspg/tcv.hpp"

namespace tspg {

struct TightStats {
    std::uint64_t intersections = 0;  // at most one per non-trivial edge
};

// Tight upper-bound graph Gt: an edge of Gq survives iff it is s-out/t-in, or
// TCV_{tau_l}(s,u) and TCV_{tau_r}(v,t) are disjoint at the pivotal
// timestamps tau_l = max{T_in(u,Gq) < tau}, tau_r = min{T_out(v,Gq) > tau}.
// One intersection decides each edge; per-vertex entry cursors advance
// monotonically over the single non-descending edge scan.
EdgeSubgraph tight_ubg(const EdgeSubgraph& gq, const Query& q, const TcvTables& tables,
                       TightStats* stats = nullptr);

}  // namespace tspg
