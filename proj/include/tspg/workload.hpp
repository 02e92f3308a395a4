#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspg/temporal_graph.hpp"
#include "tspg/types.hpp"

namespace tspg {

struct WorkloadSpec {
    std::uint32_t query_count = 0;
    Timestamp theta = 1;
    std::uint64_t seed = 0;
    bool reachability_filter = true;  // require s to temporally reach t
    std::uint32_t attempt_cap = 100;  // resampling attempts per query
};

// Deterministic under a fixed seed: samples (s, tau_b), then draws t among
// the vertices s temporally reaches within [tau_b, tau_b + theta - 1].
// Throws if the cap is exhausted or theta exceeds the timestamp span.
std::vector<Query> generate_queries(const TemporalGraph& g, const WorkloadSpec& spec);

// Query files: one "s t tau_b tau_e" line per query, external vertex ids,
// '#'/'%' comments. Reading validates ids and intervals against g.
std::vector<Query> read_queries(const TemporalGraph& g, std::istream& in);
void write_queries(const TemporalGraph& g, std::span<const Query> queries, std::ostream& out);

enum class Method : std::uint8_t { EPdtTSG, EPesTSG, EPtgTSG, VUG };

std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

struct MethodOutcome {
    Method method = Method::VUG;
    bool timed_out = false;  // the INF marker; timing/count fields are void
    double total_ms = 0;
    double quick_ms = 0;  // VUG stage split, zero for EP methods
    double tight_ms = 0;
    double eev_ms = 0;
    EdgeId ubg_edges = 0;
    EdgeId tspg_edges = 0;
};

struct QueryReport {
    Query query;
    // Upper-bound graph sizes (cheap, always filled).
    EdgeId project_edges = 0;
    EdgeId es_edges = 0;
    EdgeId tg_edges = 0;
    EdgeId gq_edges = 0;
    EdgeId gt_edges = 0;
    std::optional<EdgeId> tspg_edges;  // from the first completed method
    std::optional<std::uint64_t> path_count;
    std::vector<MethodOutcome> outcomes;

    // |E(tspG)| / |E(ubg)|; an empty upper-bound graph is vacuously tight.
    static double ratio(std::optional<EdgeId> tspg, EdgeId ubg) {
        if (!tspg) return 0;
        if (ubg == 0) return 1.0;
        return static_cast<double>(*tspg) / static_cast<double>(ubg);
    }
};

struct Aggregate {
    struct PerMethod {
        Method method;
        std::uint64_t completed = 0;
        std::uint64_t timeouts = 0;
        double total_ms = 0;  // over completed queries
    };
    std::uint64_t query_count = 0;
    std::vector<PerMethod> per_method;
    std::uint64_t peak_rss_kb = 0;  // process high-water mark after the run
    // Average upper-bound ratios over queries with a known tspG (Table-II layout).
    double avg_ratio_project = 0;
    double avg_ratio_es = 0;
    double avg_ratio_tg = 0;
    double avg_ratio_gq = 0;
    double avg_ratio_gt = 0;
    std::uint64_t ratio_samples = 0;
};

struct ExperimentOptions {
    std::vector<Method> methods{Method::EPdtTSG, Method::EPesTSG, Method::EPtgTSG, Method::VUG};
    double timeout_seconds = 60;  // per (query, method); desk-scale stand-in for 12h
    unsigned jobs = 1;
    bool count_paths = false;  // oracle path counts via enumeration (may be huge)
};

struct ExperimentResult {
    std::vector<QueryReport> reports;
    Aggregate aggregate;
};

// Runs every method on every query; timeouts are recorded, never thrown.
ExperimentResult run_experiment(const TemporalGraph& g, std::span<const Query> queries,
                                const ExperimentOptions& opts = {});

// Report writers. CSV: one row per (query, method); time columns are the only
// non-deterministic fields. Schemas documented in the README.
void write_report_csv(const ExperimentResult& result, const TemporalGraph& g, std::ostream& out);
void write_report_json(const ExperimentResult& result, const TemporalGraph& g, std::ostream& out);
void write_ratio_table(const Aggregate& aggregate, std::ostream& out);

}  // namespace tspg
