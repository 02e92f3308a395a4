#include "tspg/workload.hpp"

#include <sys/resource.h>

#include <atomic>
#include <chrono>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tspg/baselines.hpp"
#include "tspg/detail/relax.hpp"
#include "tspg/subgraph.hpp"
#include "tspg/vug.hpp"

namespace tspg {

std::vector<Query> generate_queries(const TemporalGraph& g, const WorkloadSpec& spec) {
    if (spec.theta < 1) throw std::invalid_argument("workload: theta must be >= 1");
    const GraphStats gs = stats(g);
    const Timestamp span = gs.max_time - gs.min_time + 1;
    if (span < spec.theta)
        throw std::invalid_argument("workload: theta " + std::to_string(spec.theta) +
                                    " exceeds the graph's timestamp span " + std::to_string(span));

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<Vertex> vert(0, g.vertex_count() - 1);
    std::uniform_int_distribution<Timestamp> begin(gs.min_time, gs.max_time - spec.theta + 1);

    std::vector<Query> queries;
    queries.reserve(spec.query_count);
    std::vector<Timestamp> value;
    std::vector<std::uint8_t> reached;
    while (queries.size() < spec.query_count) {
        bool found = false;
        for (std::uint32_t attempt = 0; attempt < spec.attempt_cap && !found; ++attempt) {
            const Vertex s = vert(rng);
            const Timestamp tau_b = begin(rng);
            const Timestamp tau_e = tau_b + spec.theta - 1;
            if (!spec.reachability_filter) {
                const Vertex t = vert(rng);
                if (t == s) continue;
                queries.push_back({s, t, tau_b, tau_e});
                found = true;
                break;
            }
            detail::RelaxParams params{s, kNoVertex, tau_b, tau_e};
            detail::relax_pass<true, true>(g, params, value, reached);
            std::vector<Vertex> candidates;
            for (Vertex u = 0; u < g.vertex_count(); ++u)
                if (u != s && reached[u]) candidates.push_back(u);
            if (candidates.empty()) continue;
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            queries.push_back({s, candidates[pick(rng)], tau_b, tau_e});
            found = true;
        }
        if (!found)
            throw std::runtime_error(
                "workload: no reachable (s, t) pair found in " + std::to_string(spec.attempt_cap) +
                " attempts (theta=" + std::to_string(spec.theta) + ")");
    }
    return queries;
}

std::vector<Query> read_queries(const TemporalGraph& g, std::istream& in) {
    std::vector<Query> queries;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#' || line[0] == '%') continue;
        std::istringstream fields(line);
        std::int64_t s_ext, t_ext;
        Timestamp tau_b, tau_e;
        if (!(fields >> s_ext >> t_ext >> tau_b >> tau_e))
            throw ParseError(line_no, "expected \"s t tau_b tau_e\"");
        auto s = g.find_vertex(s_ext);
        auto t = g.find_vertex(t_ext);
        if (!s || !t) throw ParseError(line_no, "unknown vertex id");
        Query q{*s, *t, tau_b, tau_e};
        validate_query(q, g.vertex_count());
        queries.push_back(q);
    }
    return queries;
}

void write_queries(const TemporalGraph& g, std::span<const Query> queries, std::ostream& out) {
    for (const Query& q : queries)
        out << g.external_id(q.s) << ' ' << g.external_id(q.t) << ' ' << q.tau_b << ' ' << q.tau_e
            << '\n';
}

std::string method_name(Method m) {
    switch (m) {
        case Method::EPdtTSG: return "EPdtTSG";
        case Method::EPesTSG: return "EPesTSG";
        case Method::EPtgTSG: return "EPtgTSG";
        case Method::VUG: return "VUG";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& name) {
    for (Method m : {Method::EPdtTSG, Method::EPesTSG, Method::EPtgTSG, Method::VUG})
        if (method_name(m) == name) return m;
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

QueryReport run_one(const TemporalGraph& g, const Query& q, const ExperimentOptions& opts) {
    QueryReport report;
    report.query = q;

    // Count columns (untimed; each method re-derives its own inputs below).
    const EdgeSubgraph projected = project(g, q);
    const EdgeSubgraph es = es_tsg(g, q);
    const EdgeSubgraph tg = tg_tsg(g, q);
    report.project_edges = projected.edge_count();
    report.es_edges = es.edge_count();
    report.tg_edges = tg.edge_count();

    {
        const PolarityTimes pt = compute_polarity(g, q);
        const EdgeSubgraph gq = quick_ubg(g, q, pt);
        const TcvTables tables = compute_tcv(gq, q);
        const EdgeSubgraph gt = tight_ubg(gq, q, tables);
        report.gq_edges = gq.edge_count();
        report.gt_edges = gt.edge_count();
    }

    for (Method m : opts.methods) {
        MethodOutcome outcome;
        outcome.method = m;
        const auto start = Clock::now();
        const Deadline deadline =
            start + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(opts.timeout_seconds));
        if (m == Method::VUG) {
            VugOptions vopts;
            vopts.deadline = &deadline;
            VugResult r = run_vug(g, q, vopts);
            outcome.timed_out = r.timed_out;
            outcome.quick_ms = r.times.quick_ms;
            outcome.tight_ms = r.times.tight_ms;
            outcome.eev_ms = r.times.eev_ms;
            if (!r.timed_out) {
                outcome.ubg_edges = r.gt.edge_count();
                outcome.tspg_edges = r.tspg.edge_count();
            }
        } else {
            EdgeSubgraph ubg;
            switch (m) {
                case Method::EPdtTSG: ubg = project(g, q); break;
                case Method::EPesTSG: ubg = es_tsg(g, q); break;
                default: ubg = tg_tsg(g, q); break;
            }
            EnumLimits limits;
            limits.deadline = deadline;
            EnumeratedTspg r = build_tspg_by_enumeration(ubg, q, limits);
            outcome.timed_out = r.enumeration.truncated;
            if (!outcome.timed_out) {
                outcome.ubg_edges = ubg.edge_count();
                outcome.tspg_edges = r.tspg.edge_count();
            }
        }
        outcome.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (!outcome.timed_out && !report.tspg_edges) report.tspg_edges = outcome.tspg_edges;
        report.outcomes.push_back(outcome);
    }

    if (opts.count_paths) {
        EnumLimits limits;
        limits.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(opts.timeout_seconds));
        const EnumResult er = enumerate_tsp(project(g, q), q, limits);
        if (!er.truncated) report.path_count = er.path_count;
    }
    return report;
}

}  // namespace

ExperimentResult run_experiment(const TemporalGraph& g, std::span<const Query> queries,
                                const ExperimentOptions& opts) {
    ExperimentResult result;
    result.reports.resize(queries.size());

    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || queries.size() <= 1) {
        for (std::size_t i = 0; i < queries.size(); ++i)
            result.reports[i] = run_one(g, queries[i], opts);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < queries.size(); i = next.fetch_add(1))
                result.reports[i] = run_one(g, queries[i], opts);
        };
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < std::min<std::size_t>(jobs, queries.size()); ++j)
            pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    Aggregate& agg = result.aggregate;
    agg.query_count = queries.size();
    for (Method m : opts.methods) agg.per_method.push_back({m, 0, 0, 0});
    for (const QueryReport& r : result.reports) {
        for (std::size_t k = 0; k < r.outcomes.size(); ++k) {
            auto& pm = agg.per_method[k];
            if (r.outcomes[k].timed_out)
                ++pm.timeouts;
            else {
                ++pm.completed;
                pm.total_ms += r.outcomes[k].total_ms;
            }
        }
        if (r.tspg_edges) {
            ++agg.ratio_samples;
            agg.avg_ratio_project += QueryReport::ratio(r.tspg_edges, r.project_edges);
            agg.avg_ratio_es += QueryReport::ratio(r.tspg_edges, r.es_edges);
            agg.avg_ratio_tg += QueryReport::ratio(r.tspg_edges, r.tg_edges);
            agg.avg_ratio_gq += QueryReport::ratio(r.tspg_edges, r.gq_edges);
            agg.avg_ratio_gt += QueryReport::ratio(r.tspg_edges, r.gt_edges);
        }
    }
    if (agg.ratio_samples) {
        agg.avg_ratio_project /= agg.ratio_samples;
        agg.avg_ratio_es /= agg.ratio_samples;
        agg.avg_ratio_tg /= agg.ratio_samples;
        agg.avg_ratio_gq /= agg.ratio_samples;
        agg.avg_ratio_gt /= agg.ratio_samples;
    }
    rusage usage{};
    if (getrusage(RUSAGE_SELF, &usage) == 0)
        agg.peak_rss_kb = static_cast<std::uint64_t>(usage.ru_maxrss);
    return result;
}

void write_report_csv(const ExperimentResult& result, const TemporalGraph& g, std::ostream& out) {
    out << "query_index,s,t,tau_b,tau_e,method,status,ubg_edges,tspg_edges,project_edges,"
           "es_edges,tg_edges,gq_edges,gt_edges,ratio,path_count,total_ms,quick_ms,tight_ms,"
           "eev_ms\n";
    for (std::size_t i = 0; i < result.reports.size(); ++i) {
        const QueryReport& r = result.reports[i];
        for (const MethodOutcome& o : r.outcomes) {
            out << i << ',' << g.external_id(r.query.s) << ',' << g.external_id(r.query.t) << ','
                << r.query.tau_b << ',' << r.query.tau_e << ',' << method_name(o.method) << ','
                << (o.timed_out ? "INF" : "ok") << ',';
            if (o.timed_out)
                out << ",,";
            else
                out << o.ubg_edges << ',' << o.tspg_edges << ',';
            out << r.project_edges << ',' << r.es_edges << ',' << r.tg_edges << ',' << r.gq_edges
                << ',' << r.gt_edges << ',';
            if (o.timed_out)
                out << "";
            else
                out << QueryReport::ratio(o.tspg_edges, o.ubg_edges);
            out << ',';
            if (r.path_count) out << *r.path_count;
            out << ',' << o.total_ms << ',' << o.quick_ms << ',' << o.tight_ms << ',' << o.eev_ms
                << '\n';
        }
    }
}

void write_report_json(const ExperimentResult& result, const TemporalGraph& g, std::ostream& out) {
    nlohmann::json j;
    j["queries"] = nlohmann::json::array();
    for (const QueryReport& r : result.reports) {
        nlohmann::json qj;
        qj["s"] = g.external_id(r.query.s);
        qj["t"] = g.external_id(r.query.t);
        qj["tau_b"] = r.query.tau_b;
        qj["tau_e"] = r.query.tau_e;
        qj["edges"] = {{"project", r.project_edges}, {"es", r.es_edges},   {"tg", r.tg_edges},
                       {"gq", r.gq_edges},           {"gt", r.gt_edges}};
        if (r.tspg_edges) qj["edges"]["tspg"] = *r.tspg_edges;
        if (r.path_count) qj["path_count"] = *r.path_count;
        qj["methods"] = nlohmann::json::array();
        for (const MethodOutcome& o : r.outcomes) {
            nlohmann::json oj;
            oj["method"] = method_name(o.method);
            oj["status"] = o.timed_out ? "INF" : "ok";
            oj["total_ms"] = o.total_ms;
            if (!o.timed_out) {
                oj["ubg_edges"] = o.ubg_edges;
                oj["tspg_edges"] = o.tspg_edges;
                oj["ratio"] = QueryReport::ratio(o.tspg_edges, o.ubg_edges);
                if (o.method == Method::VUG) {
                    oj["quick_ms"] = o.quick_ms;
                    oj["tight_ms"] = o.tight_ms;
                    oj["eev_ms"] = o.eev_ms;
                }
            }
            qj["methods"].push_back(oj);
        }
        j["queries"].push_back(qj);
    }
    const Aggregate& a = result.aggregate;
    j["aggregate"]["query_count"] = a.query_count;
    j["aggregate"]["ratio_samples"] = a.ratio_samples;
    j["aggregate"]["peak_rss_kb"] = a.peak_rss_kb;
    j["aggregate"]["avg_upper_bound_ratio"] = {{"dtTSG", a.avg_ratio_project},
                                               {"esTSG", a.avg_ratio_es},
                                               {"tgTSG", a.avg_ratio_tg},
                                               {"QuickUBG", a.avg_ratio_gq},
                                               {"TightUBG", a.avg_ratio_gt}};
    j["aggregate"]["methods"] = nlohmann::json::array();
    for (const auto& pm : a.per_method)
        j["aggregate"]["methods"].push_back({{"method", method_name(pm.method)},
                                             {"completed", pm.completed},
                                             {"timeouts", pm.timeouts},
                                             {"total_ms", pm.total_ms}});
    out << j.dump(2) << '\n';
}

void write_ratio_table(const Aggregate& a, std::ostream& out) {
    auto pct = [](double ratio) { return ratio * 100.0; };
    const std::ios::fmtflags flags = out.flags();
    const std::streamsize precision = out.precision();
    out << "average upper-bound ratio (%), " << a.ratio_samples << " queries\n";
    out << std::fixed << std::setprecision(1);
    out << "  dtTSG    " << pct(a.avg_ratio_project) << '\n';
    out << "  esTSG    " << pct(a.avg_ratio_es) << '\n';
    out << "  tgTSG    " << pct(a.avg_ratio_tg) << '\n';
    out << "  QuickUBG " << pct(a.avg_ratio_gq) << '\n';
    out << "  TightUBG " << pct(a.avg_ratio_gt) << '\n';
    out.flags(flags);
    out.precision(precision);
}

}  // namespace tspg
