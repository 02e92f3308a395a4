#include "tspg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tspg/baselines.hpp"
#include "tspg/export.hpp"
#include "tspg/generators.hpp"
#include "tspg/vug.hpp"
#include "tspg/workload.hpp"

namespace tspg {

namespace {

bool log_enabled() {
    const char* v = std::getenv("TSPG_LOG");
    return v && *v;
}

TemporalGraph load_graph_file(const std::string& path, std::ostream& err) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    LoadReport report;
    TemporalGraph g = TemporalGraph::load_edge_list(in, &report);
    if (log_enabled()) {
        const GraphStats s = stats(g);
        err << "loaded " << path << ": n=" << s.vertex_count << " m=" << s.edge_count
            << " |T|=" << s.distinct_timestamps << " d=" << s.max_degree << " (dropped "
            << report.duplicates_dropped << " dup, " << report.self_loops_dropped
            << " self-loop)\n";
    }
    return g;
}

Vertex resolve_vertex(const TemporalGraph& g, std::int64_t external) {
    auto v = g.find_vertex(external);
    if (!v) throw std::runtime_error("unknown vertex id: " + std::to_string(external));
    return *v;
}

struct QueryArgs {
    std::string graph_file;
    std::int64_t s = 0, t = 0;
    Timestamp tau_b = 0, tau_e = 0;
    std::string method = "VUG";
    std::string format = "edgelist";
    std::string out_file;
    bool stages = false;
    bool oracle = false;
    std::int64_t list_paths = -1;  // >= 0: also enumerate paths (0 = no cap)
};

ExportFormat parse_format(const std::string& name) {
    if (name == "edgelist") return ExportFormat::edge_list;
    if (name == "dot") return ExportFormat::dot;
    if (name == "json") return ExportFormat::json;
    throw std::runtime_error("unknown format: " + name);
}

int cmd_query(const QueryArgs& args, std::ostream& out, std::ostream& err) {
    TemporalGraph g = load_graph_file(args.graph_file, err);
    Query q{resolve_vertex(g, args.s), resolve_vertex(g, args.t), args.tau_b, args.tau_e};
    validate_query(q, g.vertex_count());
    const auto method = parse_method(args.method);
    if (!method) throw std::runtime_error("unknown method: " + args.method);

    EdgeSubgraph result;
    if (*method == Method::VUG) {
        VugOptions opts;
        opts.keep_tables = args.stages;
        std::vector<EevRule> trace;
        if (args.stages) opts.trace = &trace;
        VugResult r = run_vug(g, q, opts);
        if (args.stages) {
            out << "== polarity (u A(u) D(u)) ==\n";
            dump_polarity(g, r.polarity, out);
            out << "== Gq (" << r.gq.edge_count() << " edges) ==\n";
            write_edge_list(r.gq, out);
            out << "== TCV ==\n";
            dump_tcv(r.gq, q, *r.tables, out);
            out << "== Gt (" << r.gt.edge_count() << " edges) ==\n";
            write_edge_list(r.gt, out);
            out << "== verification (u v tau rule) ==\n";
            for (EdgeId id : r.gt.edge_ids()) {
                const TemporalEdge& e = g.edge(id);
                const char* rule = "?";
                switch (trace[id]) {
                    case EevRule::endpoint: rule = "endpoint"; break;
                    case EevRule::witness: rule = "witness"; break;
                    case EevRule::path: rule = "path"; break;
                    case EevRule::batch: rule = "batch"; break;
                    case EevRule::rejected: rule = "rejected"; break;
                    default: break;
                }
                out << g.external_id(e.source) << ' ' << g.external_id(e.target) << ' ' << e.time
                    << ' ' << rule << '\n';
            }
            out << "== tspG (" << r.tspg.edge_count() << " edges) ==\n";
        }
        if (log_enabled())
            err << "stages: quick " << r.times.quick_ms << " ms, tight " << r.times.tight_ms
                << " ms, eev " << r.times.eev_ms << " ms\n";
        result = std::move(r.tspg);
    } else {
        EdgeSubgraph ubg;
        switch (*method) {
            case Method::EPdtTSG: ubg = project(g, q); break;
            case Method::EPesTSG: ubg = es_tsg(g, q); break;
            default: ubg = tg_tsg(g, q); break;
        }
        if (args.stages) {
            out << "== upper-bound graph (" << ubg.edge_count() << " edges) ==\n";
            write_edge_list(ubg, out);
        }
        result = build_tspg_by_enumeration(ubg, q).tspg;
    }

    if (args.oracle) {
        EdgeSubgraph expected = build_tspg_by_enumeration(project(g, q), q).tspg;
        if (!expected.same_edge_set(result)) {
            err << "oracle mismatch: " << method_name(*method) << " returned "
                << result.edge_count() << " edges, enumeration expects " << expected.edge_count()
                << "\n";
            return 2;
        }
    }

    if (args.list_paths >= 0) {
        EnumLimits limits;
        if (args.list_paths > 0) limits.max_paths = static_cast<std::uint64_t>(args.list_paths);
        EnumResult er = enumerate_tsp(result, q, limits, [&](std::span<const EdgeId> path) {
            out << format_path(g, path) << '\n';
        });
        out << "# " << er.path_count << " path(s)" << (er.truncated ? " [truncated]" : "")
            << '\n';
    }

    if (!args.out_file.empty()) {
        std::ofstream f(args.out_file);
        if (!f) throw std::runtime_error("cannot open output file: " + args.out_file);
        write_subgraph(result, parse_format(args.format), f);
    } else {
        write_subgraph(result, parse_format(args.format), out);
    }
    return 0;
}

struct BenchArgs {
    std::string graph_file;
    std::uint32_t queries = 100;
    Timestamp theta = 6;
    std::uint64_t seed = 1;
    std::string methods = "all";
    double timeout = 60;
    unsigned jobs = 1;
    std::string csv_file, json_file;
    std::string queries_file, dump_queries_file;
    bool paths = false;
    bool no_filter = false;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    TemporalGraph g = load_graph_file(args.graph_file, err);
    std::vector<Query> queries;
    if (!args.queries_file.empty()) {
        std::ifstream f(args.queries_file);
        if (!f) throw std::runtime_error("cannot open query file: " + args.queries_file);
        queries = read_queries(g, f);
    } else {
        WorkloadSpec spec;
        spec.query_count = args.queries;
        spec.theta = args.theta;
        spec.seed = args.seed;
        spec.reachability_filter = !args.no_filter;
        queries = generate_queries(g, spec);
    }
    if (!args.dump_queries_file.empty()) {
        std::ofstream f(args.dump_queries_file);
        if (!f) throw std::runtime_error("cannot open output file: " + args.dump_queries_file);
        write_queries(g, queries, f);
    }

    ExperimentOptions opts;
    if (args.methods != "all") {
        opts.methods.clear();
        std::stringstream ss(args.methods);
        std::string name;
        while (std::getline(ss, name, ',')) {
            auto m = parse_method(name);
            if (!m) throw std::runtime_error("unknown method: " + name);
            opts.methods.push_back(*m);
        }
        if (opts.methods.empty()) throw std::runtime_error("no methods selected");
    }
    opts.timeout_seconds = args.timeout;
    opts.jobs = args.jobs;
    opts.count_paths = args.paths;

    ExperimentResult result = run_experiment(g, queries, opts);

    if (!args.csv_file.empty()) {
        std::ofstream f(args.csv_file);
        if (!f) throw std::runtime_error("cannot open output file: " + args.csv_file);
        write_report_csv(result, g, f);
    }
    if (!args.json_file.empty()) {
        std::ofstream f(args.json_file);
        if (!f) throw std::runtime_error("cannot open output file: " + args.json_file);
        write_report_json(result, g, f);
    }

    write_ratio_table(result.aggregate, out);
    for (const auto& pm : result.aggregate.per_method)
        out << method_name(pm.method) << ": " << pm.completed << " completed, " << pm.timeouts
            << " INF, total " << pm.total_ms << " ms\n";
    out << "peak RSS: " << result.aggregate.peak_rss_kb << " kB\n";
    return 0;
}

struct GenArgs {
    std::string family;
    std::string out_file;
    Vertex n = 30;
    EdgeId m = 150;
    Timestamp timestamps = 20;
    std::uint64_t seed = 1;
    std::uint32_t width = 4;
    std::uint32_t layers = 10;
    EdgeId chords = 10;
};

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream&) {
    TemporalGraph g;
    std::string note;
    if (args.family == "random") {
        g = gen_random(args.n, args.m, args.timestamps, args.seed);
    } else if (args.family == "layered") {
        g = gen_layered(args.width, args.layers);
        const Query q = layered_query(g, args.layers);
        note = "# canonical query: s=" + std::to_string(g.external_id(q.s)) +
               " t=" + std::to_string(g.external_id(q.t)) + " interval=[" +
               std::to_string(q.tau_b) + "," + std::to_string(q.tau_e) + "]\n";
    } else if (args.family == "ring") {
        g = gen_ring(args.n, args.chords, args.seed);
    } else {
        throw std::runtime_error("unknown family: " + args.family + " (random|layered|ring)");
    }

    if (!args.out_file.empty()) {
        std::ofstream f(args.out_file);
        if (!f) throw std::runtime_error("cannot open output file: " + args.out_file);
        f << note;
        export_edge_list(g, f);
        const GraphStats s = stats(g);
        out << "wrote " << args.out_file << ": n=" << s.vertex_count << " m=" << s.edge_count
            << " |T|=" << s.distinct_timestamps << '\n';
    } else {
        out << note;
        export_edge_list(g, out);
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"temporal simple path graph queries"};
    app.require_subcommand(1);

    QueryArgs qa;
    CLI::App* query = app.add_subcommand("query", "compute the tspG for one query");
    query->add_option("graph", qa.graph_file, "edge-list file")->required();
    query->add_option("s", qa.s, "source vertex (file id)")->required();
    query->add_option("t", qa.t, "target vertex (file id)")->required();
    query->add_option("tau_b", qa.tau_b, "interval start")->required();
    query->add_option("tau_e", qa.tau_e, "interval end")->required();
    query->add_option("--method", qa.method, "VUG|EPdtTSG|EPesTSG|EPtgTSG (default VUG)");
    query->add_option("--format", qa.format, "edgelist|dot|json (default edgelist)");
    query->add_option("--out", qa.out_file, "write result here instead of stdout");
    query->add_flag("--stages", qa.stages, "also emit polarity/Gq/TCV/Gt dumps");
    query->add_flag("--oracle", qa.oracle, "cross-check against enumeration; exit 2 on mismatch");
    query->add_option("--list-paths", qa.list_paths,
                      "also enumerate the tspG's paths, one per line (0 = no cap)");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand("bench", "run a random query workload");
    bench->add_option("graph", ba.graph_file, "edge-list file")->required();
    bench->add_option("--queries", ba.queries, "number of queries (default 100)");
    bench->add_option("--theta", ba.theta, "interval span (default 6)");
    bench->add_option("--seed", ba.seed, "workload seed (default 1)");
    bench->add_option("--methods", ba.methods, "all or comma list (default all)");
    bench->add_option("--timeout", ba.timeout, "per query/method seconds (default 60)");
    bench->add_option("--jobs", ba.jobs, "worker threads (default 1)");
    bench->add_option("--csv", ba.csv_file, "write per-query CSV report");
    bench->add_option("--json", ba.json_file, "write JSON report");
    bench->add_option("--queries-file", ba.queries_file,
                      "run queries from a file (\"s t tau_b tau_e\" lines) instead of sampling");
    bench->add_option("--dump-queries", ba.dump_queries_file, "save the workload's query file");
    bench->add_flag("--paths", ba.paths, "also count temporal simple paths (oracle)");
    bench->add_flag("--no-reach-filter", ba.no_filter, "skip the reachability filter");

    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic graph file");
    gen->add_option("family", ga.family, "random|layered|ring")->required();
    gen->add_option("--out", ga.out_file, "output file (default stdout)");
    gen->add_option("--n", ga.n, "random/ring: vertex count");
    gen->add_option("--m", ga.m, "random: edge count");
    gen->add_option("--T", ga.timestamps, "random: distinct timestamps");
    gen->add_option("--seed", ga.seed, "random/ring: seed");
    gen->add_option("--w", ga.width, "layered: vertices per layer");
    gen->add_option("--L", ga.layers, "layered: layer count");
    gen->add_option("--chords", ga.chords, "ring: extra shortcut edges");

    std::vector<const char*> argv;
    argv.push_back("tspg");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (query->parsed()) return cmd_query(qa, out, err);
        if (bench->parsed()) return cmd_bench(ba, out, err);
        return cmd_gen(ga, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace tspg
