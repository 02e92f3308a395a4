#pragma once

#include <optional>

#include "tspg/eev.hpp"
#include "tspg/polarity.hpp"
#include "tspg/quick_ubg.hpp"
#include "tspg/tcv.hpp"
#include "tspg/tight_ubg.hpp"

namespace tspg {

struct VugOptions {
    const Deadline* deadline = nullptr;
    bool keep_tables = false;            // retain TCV tables (stage dumps)
    std::vector<EevRule>* trace = nullptr;
};

struct VugStageTimes {
    double quick_ms = 0;  // polarity + Gq
    double tight_ms = 0;  // TCV + Gt
    double eev_ms = 0;
};

struct VugResult {
    PolarityTimes polarity;
    EdgeSubgraph gq;
    EdgeSubgraph gt;
    EdgeSubgraph tspg;
    std::optional<TcvTables> tables;
    VugStageTimes times;
    EevStats eev_stats;
    bool timed_out = false;
};

// The full pipeline: polarity times -> Gq -> TCV -> Gt -> EEV -> tspG.
VugResult run_vug(const TemporalGraph& g, const Query& q, const VugOptions& opts = {});

}  // namespace tspg
