#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tspg/polarity.hpp"

using namespace tspg;
namespace fx = tspg::testing;

TEST_CASE("running example polarity values") {
    TemporalGraph g = fx::re::graph();
    PolarityTimes pt = compute_polarity(g, fx::re::query());

    CHECK(pt.arrival_of(fx::re::f) == 4);
    CHECK(pt.departure_of(fx::re::f) == 5);
    CHECK(pt.arrival_of(fx::re::d) == 3);
    CHECK(!pt.departure_of(fx::re::a).has_value());

    // sentinels
    CHECK(pt.arrival_of(fx::re::s) == 1);
    CHECK(pt.departure_of(fx::re::t) == 8);
}

TEST_CASE("sentinels hold on arbitrary instances") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 10; ++round) {
        auto [g, q] = fx::random_instance(rng, 20, 80, 10, 8);
        PolarityTimes pt = compute_polarity(g, q);
        CHECK(pt.arrival_of(q.s) == q.tau_b - 1);
        CHECK(pt.departure_of(q.t) == q.tau_e + 1);
    }
}

TEST_CASE("polarity equals the walk oracle on 50 random instances") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 50; ++round) {
        auto [g, q] = fx::random_instance(rng, 20, 80, 10, 8);
        PolarityTimes pt = compute_polarity(g, q);
        fx::WalkOracle oracle = fx::walk_oracle(g, q);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            INFO("round ", round, " vertex ", u);
            CHECK(pt.arrival_of(u) == oracle.arrival[u]);
            CHECK(pt.departure_of(u) == oracle.departure[u]);
        }
    }
}

TEST_CASE("reached values stay inside the interval") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 30; ++round) {
        auto [g, q] = fx::random_instance(rng, 25, 100, 12, 8);
        PolarityTimes pt = compute_polarity(g, q);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            if (u != q.s && pt.arrival_reached[u]) {
                CHECK(pt.arrival[u] >= q.tau_b);
                CHECK(pt.arrival[u] <= q.tau_e);
            }
            if (u != q.t && pt.departure_reached[u]) {
                CHECK(pt.departure[u] >= q.tau_b);
                CHECK(pt.departure[u] <= q.tau_e);
            }
        }
    }
}

TEST_CASE("total adjacency advancement is at most 2m per direction") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 30; ++round) {
        auto [g, q] = fx::random_instance(rng, 25, 120, 12, 10);
        PolarityStats stats;
        compute_polarity(g, q, &stats);
        CHECK(stats.forward_advancement <= 2ull * g.edge_count());
        CHECK(stats.backward_advancement <= 2ull * g.edge_count());
    }
}

TEST_CASE("polarity dump format") {
    TemporalGraph g = fx::re::graph();
    PolarityTimes pt = compute_polarity(g, fx::re::query());
    std::ostringstream out;
    dump_polarity(g, pt, out);
    std::istringstream lines(out.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 8);
    CHECK(out.str().find("6 4 5\n") != std::string::npos);  // f: A=4 D=5
    CHECK(out.str().find("1 3 -\n") != std::string::npos);  // a: A=3, D unreached
}
