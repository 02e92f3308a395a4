#pragma once

#include <cstdint>
#include <random>

#include "tspg/temporal_graph.hpp"

namespace tspg {

// Desk-scale synthetic families standing in for the large public datasets.
// All are deterministic under a fixed seed (mt19937_64 is bit-portable).

// Uniform random temporal G(n, m, |T|): m distinct (u, v, tau) triples with
// u != v, tau in [1, T]. Throws if m exceeds the number of possible triples.
TemporalGraph gen_random(Vertex n, EdgeId m, Timestamp timestamps, std::uint64_t seed);

// Layered DAG: s -> L layers of w parallel vertices -> t, hop i carrying
// timestamp i (1-based, so the full interval is [1, L+1]). The (s, t) query
// over [1, L+1] has exactly w^L temporal simple paths -- the path-explosion
// family.
TemporalGraph gen_layered(std::uint32_t width, std::uint32_t layers);

// The canonical path-explosion query for a layered graph: s is vertex 0,
// t the last vertex, interval [1, layers + 1].
Query layered_query(const TemporalGraph& layered, std::uint32_t layers);

// Directed ring 0 -> 1 -> ... -> n-1 -> 0 with ascending timestamps plus
// `chords` random shortcut edges at random in-range timestamps.
TemporalGraph gen_ring(Vertex n, EdgeId chords, std::uint64_t seed);

}  // namespace tspg
