#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tspg/cli.hpp"
#include "tspg/temporal_graph.hpp"

using namespace tspg;
namespace fs = std::filesystem;

namespace {

const std::string kReFile = std::string(TSPG_SOURCE_DIR) + "/data/re.txt";

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("tspg_test_" + std::to_string(::getpid()) + "_" + name);
}

int count_lines(const std::string& text) {
    return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("query on the running example prints the 4-edge tspG") {
    CliRun r = cli({"query", kReFile, "0", "7", "2", "7"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 4);
    CHECK(r.out == "0 2 2\n2 3 3\n2 7 6\n3 7 7\n");
}

TEST_CASE("every method agrees under --oracle") {
    for (const char* method : {"VUG", "EPdtTSG", "EPesTSG", "EPtgTSG"}) {
        CliRun r = cli({"query", kReFile, "0", "7", "2", "7", "--method", method, "--oracle"});
        INFO(method);
        CHECK(r.code == 0);
        CHECK(r.out == "0 2 2\n2 3 3\n2 7 6\n3 7 7\n");
    }
}

TEST_CASE("usage and validation errors exit 1") {
    CHECK(cli({"query", kReFile, "0", "0", "2", "7"}).code == 1);       // s == t
    CHECK(cli({"query", kReFile, "0", "7", "7", "2"}).code == 1);       // empty interval
    CHECK(cli({"query", kReFile, "0", "99", "2", "7"}).code == 1);      // unknown vertex
    CHECK(cli({"query", "/nonexistent.txt", "0", "7", "2", "7"}).code == 1);
    CHECK(cli({"query", kReFile, "0", "7", "2", "7", "--method", "nope"}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CliRun r = cli({"query", kReFile, "0", "0", "2", "7"});
    CHECK(r.err.find("source equals target") != std::string::npos);
}

TEST_CASE("--stages emits the intermediate dumps") {
    CliRun r = cli({"query", kReFile, "0", "7", "2", "7", "--stages"});
    CHECK(r.code == 0);
    CHECK(r.out.find("== polarity") != std::string::npos);
    CHECK(r.out.find("== Gq (8 edges)") != std::string::npos);
    CHECK(r.out.find("== TCV") != std::string::npos);
    CHECK(r.out.find("== Gt (5 edges)") != std::string::npos);
    CHECK(r.out.find("== tspG (4 edges)") != std::string::npos);
}

TEST_CASE("query output formats and round-trip through the loader") {
    CliRun dot = cli({"query", kReFile, "0", "7", "2", "7", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CliRun json = cli({"query", kReFile, "0", "7", "2", "7", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"edges\"") != std::string::npos);

    fs::path out_path = temp_file("result.txt");
    CliRun file = cli({"query", kReFile, "0", "7", "2", "7", "--out", out_path.string()});
    CHECK(file.code == 0);
    std::ifstream in(out_path);
    REQUIRE(in.good());
    TemporalGraph g = TemporalGraph::load_edge_list(in);
    CHECK(g.edge_count() == 4);
    fs::remove(out_path);
}

TEST_CASE("bench writes the contracted CSV rows deterministically") {
    fs::path csv1 = temp_file("b1.csv"), csv2 = temp_file("b2.csv");
    CliRun r1 = cli({"bench", kReFile, "--queries", "10", "--theta", "6", "--seed", "1",
                     "--methods", "all", "--csv", csv1.string()});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("TightUBG") != std::string::npos);
    CliRun r2 = cli({"bench", kReFile, "--queries", "10", "--theta", "6", "--seed", "1",
                     "--methods", "all", "--csv", csv2.string()});
    CHECK(r2.code == 0);

    auto read = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = read(csv1), b = read(csv2);
    CHECK(count_lines(a) == 10 * 4 + 1);
    // identical except the trailing time columns
    auto strip = [](const std::string& csv) {
        std::istringstream in(csv);
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line)) {
            int commas = 0;
            std::size_t cut = line.size();
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (line[i] == ',') ++commas;
                if (commas == 16) {
                    cut = i;
                    break;
                }
            }
            out << line.substr(0, cut) << '\n';
        }
        return out.str();
    };
    CHECK(strip(a) == strip(b));
    fs::remove(csv1);
    fs::remove(csv2);
}

TEST_CASE("bench with a tiny timeout reports INF and exits 0") {
    fs::path graph_path = temp_file("layered.txt");
    CliRun gen = cli({"gen", "layered", "--w", "5", "--L", "11", "--out", graph_path.string()});
    REQUIRE(gen.code == 0);

    fs::path csv = temp_file("inf.csv");
    CliRun bench = cli({"bench", graph_path.string(), "--queries", "1", "--theta", "12", "--seed",
                        "1", "--methods", "EPdtTSG", "--timeout", "0.000001", "--csv",
                        csv.string()});
    CHECK(bench.code == 0);
    std::ifstream in(csv);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("INF") != std::string::npos);
    fs::remove(csv);
    fs::remove(graph_path);
}

TEST_CASE("gen layered produces the advertised path-explosion query") {
    fs::path path = temp_file("gen_layered.txt");
    CliRun r = cli({"gen", "layered", "--w", "3", "--L", "5", "--out", path.string()});
    CHECK(r.code == 0);

    std::ifstream in(path);
    TemporalGraph g = TemporalGraph::load_edge_list(in);
    // canonical query is in the header comment: [1, L+1] from vertex 0 to the last
    Query q{*g.find_vertex(0), *g.find_vertex(3 * 5 + 1), 1, 6};
    CHECK(tspg::testing::all_simple_paths(EdgeSubgraph::whole(g), q).size() == 243);
    fs::remove(path);
}

TEST_CASE("--list-paths prints the path stream") {
    CliRun r = cli({"query", kReFile, "0", "7", "2", "7", "--list-paths", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 -2-> 2 -6-> 7\n") != std::string::npos);
    CHECK(r.out.find("0 -2-> 2 -3-> 3 -7-> 7\n") != std::string::npos);
    CHECK(r.out.find("# 2 path(s)") != std::string::npos);

    CliRun capped = cli({"query", kReFile, "0", "7", "2", "7", "--list-paths", "1"});
    CHECK(capped.out.find("[truncated]") != std::string::npos);
}

TEST_CASE("bench round-trips workloads through query files") {
    fs::path qfile = temp_file("queries.txt");
    fs::path csv1 = temp_file("q1.csv"), csv2 = temp_file("q2.csv");
    CliRun dump = cli({"bench", kReFile, "--queries", "5", "--theta", "6", "--seed", "9",
                       "--methods", "VUG", "--dump-queries", qfile.string(), "--csv",
                       csv1.string()});
    REQUIRE(dump.code == 0);
    CliRun replay = cli({"bench", kReFile, "--queries-file", qfile.string(), "--methods", "VUG",
                         "--csv", csv2.string()});
    REQUIRE(replay.code == 0);
    auto read = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    // same queries -> same deterministic columns
    std::string a = read(csv1), b = read(csv2);
    CHECK(a.substr(0, a.find(",ok,")) == b.substr(0, b.find(",ok,")));
    CHECK(count_lines(read(qfile)) == 5);
    fs::remove(qfile);
    fs::remove(csv1);
    fs::remove(csv2);
}

TEST_CASE("gen random is deterministic and validates parameters") {
    CliRun a = cli({"gen", "random", "--n", "30", "--m", "150", "--T", "20", "--seed", "3"});
    CliRun b = cli({"gen", "random", "--n", "30", "--m", "150", "--T", "20", "--seed", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    CHECK(cli({"gen", "layered", "--w", "0", "--L", "5"}).code == 1);
    CHECK(cli({"gen", "random", "--n", "1", "--m", "5", "--T", "3"}).code == 1);
    CHECK(cli({"gen", "mystery"}).code == 1);
}
