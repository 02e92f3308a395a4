#include "tspg/tcv.hpp"

#include <algorithm>
#include <ostream>

namespace tspg {

namespace {

using Table = TcvTables::Table;
using EntryState = TcvTables::EntryState;

// out = a ∪ {extra}
void union_with(std::span<const Vertex> a, Vertex extra, std::vector<Vertex>& out) {
    out.clear();
    out.reserve(a.size() + 1);
    bool inserted = false;
    for (Vertex x : a) {
        if (!inserted && extra < x) {
            out.push_back(extra);
            inserted = true;
        }
        if (x == extra) inserted = true;
        out.push_back(x);
    }
    if (!inserted) out.push_back(extra);
}

// out = a ∩ b
void intersect(std::span<const Vertex> a, std::span<const Vertex> b, std::vector<Vertex>& out) {
    out.clear();
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

// One scan direction of the table computation. Forward scans edges in non-descending
// temporal order writing TCV(s, target); backward is the same routine with
// the scan reversed and the edge roles swapped, writing TCV(source, t).
template <bool IsForward>
void tcv_pass(const EdgeSubgraph& gq, const Query& q, std::vector<Table>& tables, TcvStats* stats) {
    const TemporalGraph& base = gq.base();
    const Vertex base_vertex = IsForward ? q.s : q.t;
    const Vertex other_end = IsForward ? q.t : q.s;
    [[maybe_unused]] const Timestamp theta = q.span();

    tables.assign(base.vertex_count(), Table{});
    for (Vertex u : gq.vertices()) {
        if (u == base_vertex || u == other_end) continue;
        Table& t = tables[u];
        auto adj = IsForward ? gq.in(u) : gq.out(u);
        if constexpr (IsForward) {
            for (const AdjEntry& a : adj)
                if (t.times.empty() || t.times.back() != a.time) t.times.push_back(a.time);
        } else {
            for (auto it = adj.rbegin(); it != adj.rend(); ++it)
                if (t.times.empty() || t.times.back() != it->time) t.times.push_back(it->time);
        }
        t.states.assign(t.times.size(), EntryState::unset);
        t.sets.resize(t.times.size());
    }
    Table& root = tables[base_vertex];
    root.times = {IsForward ? q.tau_b - 1 : q.tau_e + 1};
    root.states = {EntryState::value};
    root.sets = {{}};

    std::vector<Vertex> unioned, merged;
    std::vector<Vertex> singleton;

    auto ids = gq.edge_ids();
    const std::size_t m = ids.size();
    for (std::size_t k = 0; k < m; ++k) {
        const EdgeId id = ids[IsForward ? k : m - 1 - k];
        const TemporalEdge& e = base.edge(id);
        const Vertex tgt = IsForward ? e.target : e.source;
        const Vertex dep = IsForward ? e.source : e.target;
        if (tgt == other_end) continue;
        Table& tu = tables[tgt];
        if (tu.completed) continue;
        assert(tgt != base_vertex);

        // Dependency entry of dep strictly before (forward) / after (backward)
        // the current timestamp; its cursor may sit on an in-progress entry at
        // exactly e.time, in which case step back one.
        const Table& tv = tables[dep];
        assert(!tv.times.empty());
        std::uint32_t j = tv.cursor;
        if (tv.times[j] == e.time) {
            assert(j > 0);
            --j;
        }
        std::span<const Vertex> dep_set;
        if (tv.states[j] == EntryState::value) {
            dep_set = tv.sets[j];
        } else {
            assert(tv.states[j] == EntryState::completed_implicit && tv.completed);
            singleton.assign(1, dep);
            dep_set = singleton;
        }

        union_with(dep_set, tgt, unioned);
        if (stats) stats->set_work += dep_set.size() + 1;

        std::uint32_t i = tu.cursor;
        const bool past_entry = IsForward ? e.time > tu.times[i] : e.time < tu.times[i];
        if (tu.states[i] == EntryState::unset) {
            assert(i == 0 && tu.times[i] == e.time);
            tu.sets[i] = unioned;
            tu.states[i] = EntryState::value;
        } else if (past_entry) {
            // Entry i is final; the next entry inherits it (anti-monotonicity).
            ++i;
            tu.cursor = i;
            assert(i < tu.times.size() && tu.times[i] == e.time);
            intersect(tu.sets[i - 1], unioned, merged);
            if (stats) stats->set_work += tu.sets[i - 1].size() + unioned.size();
            tu.sets[i] = merged;
            tu.states[i] = EntryState::value;
        } else {
            assert(e.time == tu.times[i]);
            intersect(tu.sets[i], unioned, merged);
            if (stats) stats->set_work += tu.sets[i].size() + unioned.size();
            tu.sets[i].swap(merged);
        }
        if (stats) ++stats->entries_written;
        assert(static_cast<Timestamp>(tu.sets[tu.cursor].size()) <= theta - 1);

        if (tu.sets[tu.cursor].size() == 1 && tu.sets[tu.cursor][0] == tgt) {
            tu.completed = true;
            for (std::size_t rest = tu.cursor + 1; rest < tu.states.size(); ++rest)
                tu.states[rest] = EntryState::completed_implicit;
        }
    }
}

void dump_table(const TemporalGraph& base, const std::vector<Table>& tables, Vertex skip_a,
                Vertex skip_b, std::ostream& out) {
    for (Vertex u = 0; u < base.vertex_count(); ++u) {
        if (u == skip_a || u == skip_b) continue;
        const Table& t = tables[u];
        if (t.times.empty()) continue;
        out << base.external_id(u) << " :";
        for (std::size_t i = 0; i < t.times.size(); ++i) {
            out << " [" << t.times[i] << " -> ";
            if (t.states[i] == EntryState::completed_implicit) {
                out << "{" << base.external_id(u) << "}*";
            } else {
                out << '{';
                for (std::size_t k = 0; k < t.sets[i].size(); ++k) {
                    if (k) out << ',';
                    out << base.external_id(t.sets[i][k]);
                }
                out << '}';
            }
            out << ']';
        }
        out << '\n';
    }
}

}  // namespace

TcvTables compute_tcv(const EdgeSubgraph& gq, const Query& q, TcvStats* stats) {
    validate_query(q, gq.base().vertex_count());
    TcvTables tables;
    tcv_pass<true>(gq, q, tables.forward, stats);
    tcv_pass<false>(gq, q, tables.backward, stats);
    return tables;
}

void dump_tcv(const EdgeSubgraph& gq, const Query& q, const TcvTables& tables, std::ostream& out) {
    // The s/t base entries are internal bookkeeping; skip them in the dump.
    out << "forward\n";
    dump_table(gq.base(), tables.forward, q.s, q.t, out);
    out << "backward\n";
    dump_table(gq.base(), tables.backward, q.s, q.t, out);
}

}  // namespace tspg
