#pragma once

#include <iosfwd>
#include <string>

#include "tspg/subgraph.hpp"

namespace tspg {

enum class ExportFormat { edge_list, dot, json };

// All exports translate back to external vertex ids.
void write_edge_list(const EdgeSubgraph& s, std::ostream& out);
void write_dot(const EdgeSubgraph& s, std::ostream& out);
void write_json(const EdgeSubgraph& s, std::ostream& out);

void write_subgraph(const EdgeSubgraph& s, ExportFormat fmt, std::ostream& out);

}  // namespace tspg
