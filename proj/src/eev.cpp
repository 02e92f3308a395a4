#include "tspg/eev.hpp"

#include <algorithm>
#include <cassert>

namespace tspg {

namespace {

enum class Dir : std::uint8_t { forward, backward };

class BidirSearcher {
public:
    BidirSearcher(const EdgeSubgraph& gt, const Query& q, SearchState& st)
        : gt_(gt), q_(q), st_(st) {}

    bool run(EdgeId seed_id) {
        seed_id_ = seed_id;
        seed_ = gt_.edge(seed_id);
        if (st_.visited.size() != gt_.base().vertex_count())
            st_.visited.assign(gt_.base().vertex_count(), 0);
        st_.visited[seed_.source] = 1;
        st_.visited[seed_.target] = 1;
        st_.path_edges.assign(1, seed_id);
        st_.found_fwd = st_.found_bwd = false;
        const Dir dir =
            (seed_.time - q_.tau_b > q_.tau_e - seed_.time) ? Dir::forward : Dir::backward;
        const bool ok = frame(seed_, dir);
        if (!ok) {
            st_.visited[seed_.source] = 0;
            st_.visited[seed_.target] = 0;
        }
        return ok;
    }

private:
    // The frame's edge is already on the stack with its endpoints visited.
    bool frame(const TemporalEdge& e, Dir dir) {
        ++st_.expansions;
        st_.max_stack = std::max(st_.max_stack, st_.path_edges.size());
        assert(st_.path_edges.size() <= static_cast<std::size_t>(q_.span()));
        if (st_.deadline && (st_.expansions & 1023u) == 0 &&
            std::chrono::steady_clock::now() > *st_.deadline) {
            st_.timed_out = true;
            return false;
        }

        // A completed side toggles direction and restarts from the seed edge;
        // if the other side fails the completion is undone with the prefix.
        if (dir == Dir::forward && e.target == q_.t) {
            st_.found_fwd = true;
            if (st_.found_bwd || frame(seed_, Dir::backward)) return true;
            st_.found_fwd = false;
            return false;
        }
        if (dir == Dir::backward && e.source == q_.s) {
            st_.found_bwd = true;
            if (st_.found_fwd || frame(seed_, Dir::forward)) return true;
            st_.found_bwd = false;
            return false;
        }

        if (dir == Dir::forward) {
            auto adj = gt_.out(e.target);
            for (auto it = adj.rbegin(); it != adj.rend(); ++it) {
                if (it->time <= e.time) break;
                if (st_.visited[it->neighbor]) continue;
                if (extend(it->neighbor, {e.target, it->neighbor, it->time}, it->edge, dir))
                    return true;
                if (st_.timed_out) return false;
            }
        } else {
            for (const AdjEntry& a : gt_.in(e.source)) {
                if (a.time >= e.time) break;
                if (st_.visited[a.neighbor]) continue;
                if (extend(a.neighbor, {a.neighbor, e.source, a.time}, a.edge, dir)) return true;
                if (st_.timed_out) return false;
            }
        }
        return false;
    }

    bool extend(Vertex fresh, TemporalEdge e, EdgeId id, Dir dir) {
        st_.visited[fresh] = 1;
        st_.path_edges.push_back(id);
        if (frame(e, dir)) return true;
        st_.visited[fresh] = 0;
        st_.path_edges.pop_back();
        return false;
    }

    const EdgeSubgraph& gt_;
    const Query& q_;
    SearchState& st_;
    TemporalEdge seed_{};
    EdgeId seed_id_ = 0;
};

}  // namespace

std::optional<std::vector<EdgeId>> bidir_search(const EdgeSubgraph& gt, const Query& q,
                                                EdgeId seed, SearchState& state) {
    BidirSearcher searcher(gt, q, state);
    if (!searcher.run(seed)) return std::nullopt;
    std::vector<EdgeId> path = state.path_edges;
    // Leave the visited bitset clean so the state can serve the next seed.
    for (EdgeId id : path) {
        state.visited[gt.edge(id).source] = 0;
        state.visited[gt.edge(id).target] = 0;
    }
    std::sort(path.begin(), path.end(), [&gt](EdgeId a, EdgeId b) {
        return gt.edge(a).time < gt.edge(b).time;
    });
    return path;
}

std::pair<Timestamp, Timestamp> replacement_window(const TemporalGraph& g,
                                                   std::span<const EdgeId> path, std::size_t i,
                                                   const Query& q) {
    const Timestamp lo = i == 0 ? q.tau_b - 1 : g.edge(path[i - 1]).time;
    const Timestamp hi = i + 1 == path.size() ? q.tau_e + 1 : g.edge(path[i + 1]).time;
    return {lo, hi};
}

EevResult eev(const EdgeSubgraph& gt, const Query& q, const EevOptions& opts) {
    const TemporalGraph& base = gt.base();
    validate_query(q, base.vertex_count());

    EevResult result;
    std::vector<std::uint8_t> verified(base.edge_count(), 0);
    std::vector<std::uint8_t> rejected(base.edge_count(), 0);
    std::vector<EdgeId> accepted;
    if (opts.trace) opts.trace->assign(base.edge_count(), EevRule::undecided);

    auto confirm = [&](EdgeId id, EevRule rule) {
        if (verified[id]) return;
        verified[id] = 1;
        accepted.push_back(id);
        if (opts.trace) (*opts.trace)[id] = rule;
        if (rule == EevRule::endpoint || rule == EevRule::witness) ++result.stats.rule_confirmed;
        if (rule == EevRule::batch) ++result.stats.batch_confirmed;
    };

    // One-hop witnesses: earliest s->u edge and latest v->t edge inside Gt.
    std::vector<Timestamp> min_s_out(base.vertex_count(), 0);
    std::vector<std::uint8_t> has_s_out(base.vertex_count(), 0);
    for (const AdjEntry& a : gt.out(q.s))
        if (!has_s_out[a.neighbor] || a.time < min_s_out[a.neighbor]) {
            has_s_out[a.neighbor] = 1;
            min_s_out[a.neighbor] = a.time;
        }
    std::vector<Timestamp> max_t_in(base.vertex_count(), 0);
    std::vector<std::uint8_t> has_t_in(base.vertex_count(), 0);
    for (const AdjEntry& a : gt.in(q.t))
        if (!has_t_in[a.neighbor] || a.time > max_t_in[a.neighbor]) {
            has_t_in[a.neighbor] = 1;
            max_t_in[a.neighbor] = a.time;
        }

    for (EdgeId id : gt.edge_ids()) {
        const TemporalEdge& e = base.edge(id);
        if (e.source == q.s || e.target == q.t)
            confirm(id, EevRule::endpoint);
        else if ((has_s_out[e.source] && min_s_out[e.source] < e.time) ||
                 (has_t_in[e.target] && max_t_in[e.target] > e.time))
            confirm(id, EevRule::witness);
    }

    SearchState state;
    state.deadline = opts.deadline;
    for (EdgeId id : gt.edge_ids()) {
        if (verified[id] || rejected[id]) continue;
        if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) {
            result.timed_out = true;
            return result;
        }
        ++result.stats.searches;
        auto path = bidir_search(gt, q, id, state);
        result.stats.max_stack = std::max(result.stats.max_stack, state.max_stack);
        if (state.timed_out) {
            result.timed_out = true;
            return result;
        }
        if (!path) {
            rejected[id] = 1;
            if (opts.trace) (*opts.trace)[id] = EevRule::rejected;
            continue;
        }
        ++result.stats.paths_found;

        // Confirm interior path edges together with every parallel edge whose
        // timestamp falls strictly between the neighboring path timestamps.
        // Positions 1, 2, l-1, l are already rule-verified.
        const std::size_t l = path->size();
        for (std::size_t i = 2; i + 2 < l; ++i) {  // 0-based: positions 3..l-2
            const TemporalEdge& host = base.edge((*path)[i]);
            const auto [lo, hi] = replacement_window(base, *path, i, q);
            for (const AdjEntry& a : gt.out(host.source)) {
                if (a.time >= hi) break;
                if (a.time <= lo || a.neighbor != host.target) continue;
                const bool is_host = a.edge == (*path)[i];
                if (!verified[a.edge] && opts.batch_log && !is_host)
                    opts.batch_log->emplace_back(*path, a.edge);
                confirm(a.edge, is_host ? EevRule::path : EevRule::batch);
            }
        }
        // Every edge of the found path must now be verified (short paths are
        // fully covered by the rule pass).
        for (EdgeId pe : *path) assert(verified[pe]);
    }

    result.tspg = EdgeSubgraph::from_edge_ids(base, std::move(accepted));
    return result;
}

}  // namespace tspg
