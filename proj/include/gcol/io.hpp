#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gcol/coloring.hpp"
#include "gcol/graph.hpp"

namespace gcol {

inline constexpr int kSchemaVersion = 1;

// All file formats use 1-based vertex ids; conversion happens here at the
// boundary. In-memory ids are dense and 0-based.

Graph parse_dimacs(std::istream& in);
std::string to_dimacs(const Graph& g);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// DOT export; role labels become node labels.
std::string to_dot(const Graph& g);

WitnessCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const WitnessCertificate& cert);

// Reads a graph from a file, dispatching on extension (.json vs DIMACS) or
// on content when the extension is unknown.
Graph load_graph(const std::string& path);
Graph load_graph_auto(std::istream& in);

nlohmann::json load_json(const std::string& path);

}  // namespace gcol
