#include "tspg/temporal_graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

namespace tspg {

namespace {

struct RawEdge {
    std::int64_t u, v;
    Timestamp tau;
};

bool parse_int(std::string_view token, std::int64_t& value) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

// Splits a line on whitespace; returns false for blank lines.
bool tokenize(const std::string& line, std::string_view tokens[3], std::uint64_t line_no) {
    std::size_t pos = 0;
    int count = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size()) break;
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (count < 3)
            tokens[count] = std::string_view(line).substr(start, pos - start);
        ++count;
    }
    if (count == 0) return false;
    if (count < 3)
        throw ParseError(line_no, "expected \"u v tau\", got " + std::to_string(count) + " field(s)");
    return true;
}

}  // namespace

TemporalGraph TemporalGraph::load_edge_list(std::istream& in, LoadReport* report,
                                            const LoadOptions& options) {
    LoadReport local;
    std::vector<RawEdge> raw;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++local.lines_read;
        if (!line.empty() && (line[0] == '#' || line[0] == '%')) continue;
        std::string_view tokens[3];
        if (!tokenize(line, tokens, line_no)) continue;
        std::int64_t u, v, tau;
        if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v) || !parse_int(tokens[2], tau))
            throw ParseError(line_no, "non-integer token");
        if (u < 0 || v < 0)
            throw ParseError(line_no, "negative vertex id");
        if (tau < kMinTimestamp || tau > kMaxTimestamp)
            throw ParseError(line_no, "timestamp too close to the representable extreme");
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        raw.push_back({u, v, tau});
    }
    if (raw.empty())
        throw std::runtime_error("empty graph: no edges loaded");

    TemporalGraph g;
    g.external_ids_.reserve(64);
    auto intern = [&g](std::int64_t ext) -> Vertex {
        auto [it, inserted] = g.id_of_external_.try_emplace(ext, static_cast<Vertex>(g.external_ids_.size()));
        if (inserted) g.external_ids_.push_back(ext);
        return it->second;
    };
    g.edges_.reserve(raw.size());
    for (const RawEdge& e : raw)
        g.edges_.push_back({intern(e.u), intern(e.v), e.tau});
    g.n_ = static_cast<Vertex>(g.external_ids_.size());

    std::sort(g.edges_.begin(), g.edges_.end(), edge_less);
    auto last = std::unique(g.edges_.begin(), g.edges_.end());
    local.duplicates_dropped = static_cast<std::uint64_t>(g.edges_.end() - last);
    g.edges_.erase(last, g.edges_.end());
    local.edges_kept = g.edges_.size();

    while (g.n_ < options.min_vertex_count) {
        // Synthetic padding keeps external == internal for the padded tail.
        g.external_ids_.push_back(g.n_);
        g.id_of_external_.try_emplace(g.n_, g.n_);
        ++g.n_;
    }

    g.build_adjacency();
    if (report) *report = local;
    return g;
}

TemporalGraph TemporalGraph::from_internal_edges(Vertex vertex_count, std::vector<TemporalEdge> edges) {
    TemporalGraph g;
    g.n_ = vertex_count;
    for (const TemporalEdge& e : edges) {
        if (e.source >= vertex_count || e.target >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.time < kMinTimestamp || e.time > kMaxTimestamp)
            throw std::invalid_argument("timestamp too close to the representable extreme");
        if (e.source != e.target)
            g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end(), edge_less);
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.external_ids_.resize(vertex_count);
    for (Vertex u = 0; u < vertex_count; ++u) {
        g.external_ids_[u] = u;
        g.id_of_external_.emplace(u, u);
    }
    g.build_adjacency();
    return g;
}

void TemporalGraph::build_adjacency() {
    out_offsets_.assign(n_ + 1, 0);
    in_offsets_.assign(n_ + 1, 0);
    for (const TemporalEdge& e : edges_) {
        ++out_offsets_[e.source + 1];
        ++in_offsets_[e.target + 1];
    }
    for (Vertex u = 0; u < n_; ++u) {
        out_offsets_[u + 1] += out_offsets_[u];
        in_offsets_[u + 1] += in_offsets_[u];
    }
    out_entries_.resize(edges_.size());
    in_entries_.resize(edges_.size());
    std::vector<std::uint32_t> out_pos(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_pos(in_offsets_.begin(), in_offsets_.end() - 1);
    // edges_ is (tau, source, target)-sorted, so filling in order leaves each
    // adjacency list sorted by (tau, neighbor) except for same-timestamp
    // neighbor ties, fixed below.
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const TemporalEdge& e = edges_[id];
        out_entries_[out_pos[e.source]++] = {e.target, e.time, id};
        in_entries_[in_pos[e.target]++] = {e.source, e.time, id};
    }
    auto by_time_neighbor = [](const AdjEntry& a, const AdjEntry& b) {
        if (a.time != b.time) return a.time < b.time;
        return a.neighbor < b.neighbor;
    };
    for (Vertex u = 0; u < n_; ++u) {
        std::sort(out_entries_.begin() + out_offsets_[u], out_entries_.begin() + out_offsets_[u + 1],
                  by_time_neighbor);
        std::sort(in_entries_.begin() + in_offsets_[u], in_entries_.begin() + in_offsets_[u + 1],
                  by_time_neighbor);
    }
}

std::optional<Vertex> TemporalGraph::find_vertex(std::int64_t external) const {
    auto it = id_of_external_.find(external);
    if (it == id_of_external_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeId> TemporalGraph::find_edge(Vertex u, Vertex v, Timestamp tau) const {
    TemporalEdge probe{u, v, tau};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe, edge_less);
    if (it != edges_.end() && *it == probe)
        return static_cast<EdgeId>(it - edges_.begin());
    return std::nullopt;
}

GraphStats stats(const TemporalGraph& g) {
    GraphStats s;
    s.vertex_count = g.vertex_count();
    s.edge_count = g.edge_count();
    std::vector<Timestamp> times;
    times.reserve(g.edge_count());
    for (const TemporalEdge& e : g.edges()) times.push_back(e.time);
    std::sort(times.begin(), times.end());
    if (!times.empty()) {
        s.min_time = times.front();
        s.max_time = times.back();
    }
    s.distinct_timestamps = std::unique(times.begin(), times.end()) - times.begin();
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        s.max_degree = std::max({s.max_degree, g.out(u).size(), g.in(u).size()});
    return s;
}

void export_edge_list(const TemporalGraph& g, std::ostream& out) {
    struct Line {
        Timestamp tau;
        std::int64_t u, v;
    };
    std::vector<Line> lines;
    lines.reserve(g.edge_count());
    for (const TemporalEdge& e : g.edges())
        lines.push_back({e.time, g.external_id(e.source), g.external_id(e.target)});
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        if (a.tau != b.tau) return a.tau < b.tau;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    for (const Line& l : lines)
        out << l.u << ' ' << l.v << ' ' << l.tau << '\n';
}

}  // namespace tspg
