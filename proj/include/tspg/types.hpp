#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tspg {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Timestamp = std::int64_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Timestamps stay one step away from the representable extremes so the
// sentinels tau_b - 1 and tau_e + 1 never overflow.
inline constexpr Timestamp kMinTimestamp = std::numeric_limits<Timestamp>::min() + 1;
inline constexpr Timestamp kMaxTimestamp = std::numeric_limits<Timestamp>::max() - 1;

// A directed temporal edge e(u, v, tau) over dense internal vertex indices.
struct TemporalEdge {
    Vertex source = 0;
    Vertex target = 0;
    Timestamp time = 0;

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Canonical edge order: (tau, source, target).
inline bool edge_less(const TemporalEdge& a, const TemporalEdge& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
}

// Query (s, t, [tau_b, tau_e]) over internal vertex indices.
struct Query {
    Vertex s = 0;
    Vertex t = 0;
    Timestamp tau_b = 0;
    Timestamp tau_e = 0;

    // Span theta = tau_e - tau_b + 1; bounds every temporal path length.
    Timestamp span() const { return tau_e - tau_b + 1; }

    friend bool operator==(const Query&, const Query&) = default;
};

class QueryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void validate_query(const Query& q, Vertex vertex_count) {
    if (q.s >= vertex_count || q.t >= vertex_count)
        throw QueryError("query vertex out of range");
    if (q.s == q.t)
        throw QueryError("source equals target");
    if (q.tau_b > q.tau_e)
        throw QueryError("empty time interval: tau_b > tau_e");
    if (q.tau_b < kMinTimestamp || q.tau_e > kMaxTimestamp)
        throw QueryError("query interval leaves no sentinel headroom");
}

}  // namespace tspg
