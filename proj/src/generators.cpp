#include "tspg/generators.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

namespace tspg {

TemporalGraph gen_random(Vertex n, EdgeId m, Timestamp timestamps, std::uint64_t seed) {
    if (n < 2 || timestamps < 1)
        throw std::invalid_argument("gen_random: need n >= 2 and T >= 1");
    const double capacity =
        static_cast<double>(n) * (n - 1) * static_cast<double>(timestamps);
    if (static_cast<double>(m) > capacity)
        throw std::invalid_argument("gen_random: m exceeds n*(n-1)*T distinct triples");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> vert(0, n - 1);
    std::uniform_int_distribution<Timestamp> time(1, timestamps);
    std::set<std::tuple<Vertex, Vertex, Timestamp>> seen;
    std::vector<TemporalEdge> edges;
    while (edges.size() < m) {
        Vertex u = vert(rng);
        Vertex v = vert(rng);
        if (u == v) continue;
        Timestamp tau = time(rng);
        if (seen.emplace(u, v, tau).second) edges.push_back({u, v, tau});
    }
    return TemporalGraph::from_internal_edges(n, std::move(edges));
}

TemporalGraph gen_layered(std::uint32_t width, std::uint32_t layers) {
    if (width < 1 || layers < 1)
        throw std::invalid_argument("gen_layered: need width >= 1 and layers >= 1");
    // Vertex layout: 0 = s, then layer-major blocks, last = t.
    const Vertex n = 2 + width * layers;
    const Vertex t = n - 1;
    auto layer_vertex = [&](std::uint32_t layer, std::uint32_t slot) -> Vertex {
        return 1 + layer * width + slot;
    };
    std::vector<TemporalEdge> edges;
    for (std::uint32_t j = 0; j < width; ++j)
        edges.push_back({0, layer_vertex(0, j), 1});
    for (std::uint32_t layer = 0; layer + 1 < layers; ++layer)
        for (std::uint32_t a = 0; a < width; ++a)
            for (std::uint32_t b = 0; b < width; ++b)
                edges.push_back({layer_vertex(layer, a), layer_vertex(layer + 1, b),
                                 static_cast<Timestamp>(layer + 2)});
    for (std::uint32_t j = 0; j < width; ++j)
        edges.push_back({layer_vertex(layers - 1, j), t, static_cast<Timestamp>(layers + 1)});
    return TemporalGraph::from_internal_edges(n, std::move(edges));
}

Query layered_query(const TemporalGraph& layered, std::uint32_t layers) {
    // s and t are the first and last internal ids by construction.
    return Query{0, layered.vertex_count() - 1, 1, static_cast<Timestamp>(layers) + 1};
}

TemporalGraph gen_ring(Vertex n, EdgeId chords, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("gen_ring: need n >= 3");
    std::vector<TemporalEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        edges.push_back({u, static_cast<Vertex>((u + 1) % n), static_cast<Timestamp>(u + 1)});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> vert(0, n - 1);
    std::uniform_int_distribution<Timestamp> time(1, static_cast<Timestamp>(n));
    std::set<std::tuple<Vertex, Vertex, Timestamp>> seen;
    for (const TemporalEdge& e : edges) seen.emplace(e.source, e.target, e.time);
    EdgeId added = 0;
    std::uint64_t attempts = 0;
    while (added < chords && attempts < 1000ull * (chords + 1)) {
        ++attempts;
        Vertex u = vert(rng);
        Vertex v = vert(rng);
        if (u == v) continue;
        Timestamp tau = time(rng);
        if (seen.emplace(u, v, tau).second) {
            edges.push_back({u, v, tau});
            ++added;
        }
    }
    return TemporalGraph::from_internal_edges(n, std::move(edges));
}

}  // namespace tspg
