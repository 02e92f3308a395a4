#include "tspg/vug.hpp"

#include <chrono>

namespace tspg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool past(const Deadline* deadline) {
    return deadline && Clock::now() > *deadline;
}

}  // namespace

VugResult run_vug(const TemporalGraph& g, const Query& q, const VugOptions& opts) {
    VugResult r;

    auto t0 = Clock::now();
    r.polarity = compute_polarity(g, q);
    r.gq = quick_ubg(g, q, r.polarity);
    r.times.quick_ms = ms_since(t0);
    if (past(opts.deadline)) {
        r.timed_out = true;
        return r;
    }

    auto t1 = Clock::now();
    TcvTables tables = compute_tcv(r.gq, q);
    r.gt = tight_ubg(r.gq, q, tables);
    r.times.tight_ms = ms_since(t1);
    if (opts.keep_tables) r.tables = std::move(tables);
    if (past(opts.deadline)) {
        r.timed_out = true;
        return r;
    }

    auto t2 = Clock::now();
    EevOptions eev_opts;
    eev_opts.deadline = opts.deadline;
    eev_opts.trace = opts.trace;
    EevResult er = eev(r.gt, q, eev_opts);
    r.times.eev_ms = ms_since(t2);
    r.tspg = std::move(er.tspg);
    r.eev_stats = er.stats;
    r.timed_out = er.timed_out;
    return r;
}

}  // namespace tspg
