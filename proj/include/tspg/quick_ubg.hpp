#pragma once

#include "tspg/polarity.hpp"
#include "tspg/subgraph.hpp"

namespace tspg {

// Quick upper-bound graph Gq: exactly the edges lying on at least one
// temporal (not necessarily simple) s -> t path inside the interval,
// identified per edge by A(u) < tau < D(v). Unreached endpoints fail the
// comparison by construction; no special-casing needed.
EdgeSubgraph quick_ubg(const TemporalGraph& g, const Query& q, const PolarityTimes& pt);

}  // namespace tspg
