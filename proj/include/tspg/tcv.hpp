#pragma once

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tspg/subgraph.hpp"
#include "tspg/types.hpp"

namespace tspg {

// Time-stream common vertices over Gq. For each vertex u the forward table
// holds TCV_tau(s,u) at every tau in T_in(u,Gq) (ascending); the backward
// table holds TCV_tau(u,t) at every tau in T_out(u,Gq) (descending). Once a
// vertex completes (its current entry shrank to {u}), every remaining entry
// is {u} and is tagged completed_implicit instead of being stored.
class TcvTables {
public:
    enum class EntryState : std::uint8_t { unset, value, completed_implicit };

    struct Table {
        std::vector<Timestamp> times;
        std::vector<EntryState> states;
        std::vector<std::vector<Vertex>> sets;  // sorted vertex sets
        bool completed = false;
        std::uint32_t cursor = 0;

        std::size_t size() const { return times.size(); }
    };

    std::vector<Table> forward;   // s carries the base entry (tau_b - 1, {})
    std::vector<Table> backward;  // t carries the base entry (tau_e + 1, {})

    // Entry set with the Null convention decoded: a completed_implicit entry
    // of vertex u means {u}.
    std::span<const Vertex> resolve(bool fwd, Vertex u, std::size_t idx,
                                    std::vector<Vertex>& scratch) const {
        const Table& t = fwd ? forward[u] : backward[u];
        if (t.states[idx] == EntryState::value) return t.sets[idx];
        assert(t.states[idx] == EntryState::completed_implicit);
        scratch.assign(1, u);
        return scratch;
    }
};

struct TcvStats {
    std::uint64_t set_work = 0;  // elements touched by union/intersection merges
    std::uint64_t entries_written = 0;
};

TcvTables compute_tcv(const EdgeSubgraph& gq, const Query& q, TcvStats* stats = nullptr);

// "u : [tau -> {set}] ..." per direction, external ids, for fixture diffing.
void dump_tcv(const EdgeSubgraph& gq, const Query& q, const TcvTables& tables, std::ostream& out);

}  // namespace tspg
