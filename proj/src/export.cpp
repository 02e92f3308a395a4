#include "tspg/export.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include <json.hpp>

namespace tspg {

namespace {

struct ExternalEdge {
    Timestamp tau;
    std::int64_t u, v;
};

std::vector<ExternalEdge> external_edges(const EdgeSubgraph& s) {
    std::vector<ExternalEdge> out;
    out.reserve(s.edge_count());
    for (EdgeId id : s.edge_ids()) {
        const TemporalEdge& e = s.edge(id);
        out.push_back({e.time, s.base().external_id(e.source), s.base().external_id(e.target)});
    }
    std::sort(out.begin(), out.end(), [](const ExternalEdge& a, const ExternalEdge& b) {
        if (a.tau != b.tau) return a.tau < b.tau;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    return out;
}

}  // namespace

void write_edge_list(const EdgeSubgraph& s, std::ostream& out) {
    for (const ExternalEdge& e : external_edges(s))
        out << e.u << ' ' << e.v << ' ' << e.tau << '\n';
}

void write_dot(const EdgeSubgraph& s, std::ostream& out) {
    out << "digraph tspg {\n";
    for (Vertex u : s.vertices())
        out << "  " << s.base().external_id(u) << ";\n";
    for (const ExternalEdge& e : external_edges(s))
        out << "  " << e.u << " -> " << e.v << " [label=\"" << e.tau << "\"];\n";
    out << "}\n";
}

void write_json(const EdgeSubgraph& s, std::ostream& out) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (Vertex u : s.vertices())
        j["nodes"].push_back(s.base().external_id(u));
    j["edges"] = nlohmann::json::array();
    for (const ExternalEdge& e : external_edges(s))
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"t", e.tau}});
    out << j.dump(2) << '\n';
}

void write_subgraph(const EdgeSubgraph& s, ExportFormat fmt, std::ostream& out) {
    switch (fmt) {
        case ExportFormat::edge_list: write_edge_list(s, out); break;
        case ExportFormat::dot: write_dot(s, out); break;
        case ExportFormat::json: write_json(s, out); break;
    }
}

}  // namespace tspg
