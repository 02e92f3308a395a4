#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tspg/baselines.hpp"
#include "tspg/quick_ubg.hpp"

using namespace tspg;
namespace fx = tspg::testing;

namespace {

EdgeSubgraph gq_of(const TemporalGraph& g, const Query& q) {
    return quick_ubg(g, q, compute_polarity(g, q));
}

}  // namespace

TEST_CASE("running example Gq") {
    TemporalGraph g = fx::re::graph();
    EdgeSubgraph gq = gq_of(g, fx::re::query());

    CHECK(gq.edge_count() == 8);
    using namespace fx::re;
    // the paper's exclusions
    CHECK(!gq.contains_edge(*g.find_edge(s, a, 3)));
    CHECK(!gq.contains_edge(*g.find_edge(d, t, 2)));
    // the full derived edge set
    for (auto [u, v, tau] : std::vector<TemporalEdge>{
             {s, b, 2}, {b, c, 3}, {b, t, 6}, {c, f, 4}, {c, t, 7}, {f, e, 5}, {f, b, 5}, {e, c, 6}})
        CHECK(gq.contains_edge(*g.find_edge(u, v, tau)));
}

TEST_CASE("single edge graph") {
    TemporalGraph g = TemporalGraph::from_internal_edges(2, {{0, 1, 5}});
    EdgeSubgraph gq = gq_of(g, {0, 1, 1, 10});
    CHECK(gq.edge_count() == 1);
}

TEST_CASE("Gq equals the union of edges over temporal s-t walks") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 50; ++round) {
        auto [g, q] = fx::random_instance(rng, 18, 70, 10, 8);
        EdgeSubgraph gq = gq_of(g, q);
        fx::WalkOracle oracle = fx::walk_oracle(g, q);
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            INFO("round ", round, " edge ", id);
            CHECK(gq.contains_edge(id) == static_cast<bool>(oracle.on_st_walk[id]));
        }
    }
}

TEST_CASE("Gq edge set equals tgTSG on every instance") {
    std::mt19937_64 rng(77);
    TemporalGraph re = fx::re::graph();
    CHECK(gq_of(re, fx::re::query()).same_edge_set(tg_tsg(re, fx::re::query())));
    for (int round = 0; round < 100; ++round) {
        auto [g, q] = fx::random_instance(rng, 25, 120, 12, 10);
        CHECK(gq_of(g, q).same_edge_set(tg_tsg(g, q)));
    }
}

TEST_CASE("containment: Gq inside projection inside G") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 50; ++round) {
        auto [g, q] = fx::random_instance(rng, 25, 120, 12, 10);
        EdgeSubgraph gq = gq_of(g, q);
        EdgeSubgraph proj = project(g, q);
        CHECK(gq.subset_of(proj));
        CHECK(proj.edge_count() <= g.edge_count());
    }
}

TEST_CASE("Gq edges arrive in non-descending timestamp order") {
    std::mt19937_64 rng(8);
    auto [g, q] = fx::random_instance(rng, 20, 100, 10, 8);
    EdgeSubgraph gq = gq_of(g, q);
    Timestamp last = kMinTimestamp;
    for (EdgeId id : gq.edge_ids()) {
        CHECK(g.edge(id).time >= last);
        last = g.edge(id).time;
    }
}
