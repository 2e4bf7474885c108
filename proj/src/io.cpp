#include "gcol/io.hpp"

#include <fstream>
#include <sstream>

namespace gcol {

Graph parse_dimacs(std::istream& in) {
  std::string line;
  Graph g;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    char tag;
    ls >> tag;
    if (tag == 'c') continue;
    if (tag == 'p') {
      std::string fmt;
      int n = 0;
      long long m = 0;
      ls >> fmt >> n >> m;
      if (!ls || (fmt != "edge" && fmt != "col"))
        throw std::invalid_argument("bad DIMACS header");
      g = Graph(n);
      have_header = true;
    } else if (tag == 'e') {
      if (!have_header) throw std::invalid_argument("DIMACS edge before header");
      int u = 0, v = 0;
      ls >> u >> v;
      if (!ls) throw std::invalid_argument("bad DIMACS edge line");
      g.add_edge(u - 1, v - 1);
    }
  }
  if (!have_header) throw std::invalid_argument("missing DIMACS header");
  return g;
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [v, role] : g.roles()) out << "c role " << (v + 1) << " " << role << "\n";
  for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  Graph g(n);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge entry");
    g.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  if (j.contains("roles"))
    for (const auto& [key, val] : j.at("roles").items())
      g.set_role(std::stoi(key) - 1, val.get<std::string>());
  return g;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  j["edges"] = std::move(edges);
  if (!g.roles().empty()) {
    nlohmann::json roles;
    for (const auto& [v, role] : g.roles()) roles[std::to_string(v + 1)] = role;
    j["roles"] = std::move(roles);
  }
  return j;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << (v + 1);
    if (const std::string* r = g.role(v)) out << " [label=\"" << *r << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  v" << (u + 1) << " -- v" << (v + 1) << ";\n";
  out << "}\n";
  return out.str();
}

WitnessCertificate certificate_from_json(const nlohmann::json& j) {
  WitnessCertificate cert;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "grundy")
    cert.kind = WitnessKind::Grundy;
  else if (kind == "partial_grundy")
    cert.kind = WitnessKind::PartialGrundy;
  else if (kind == "b_coloring")
    cert.kind = WitnessKind::BColoring;
  else
    throw std::invalid_argument("unknown certificate kind: " + kind);
  std::vector<VertexSet> classes;
  for (const auto& cls : j.at("classes")) {
    VertexSet c;
    for (const auto& v : cls) c.push_back(v.get<int>() - 1);
    classes.push_back(sorted_unique(std::move(c)));
  }
  std::optional<std::vector<int>> centers;
  if (j.contains("centers") && !j.at("centers").is_null()) {
    centers.emplace();
    for (const auto& v : j.at("centers")) centers->push_back(v.get<int>() - 1);
  }
  return certificate_from_classes(cert.kind, std::move(classes), std::move(centers));
}

nlohmann::json certificate_to_json(const WitnessCertificate& cert) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = witness_kind_name(cert.kind);
  auto classes = nlohmann::json::array();
  for (const auto& cls : cert.classes) {
    auto arr = nlohmann::json::array();
    for (int v : cls) arr.push_back(v + 1);
    classes.push_back(std::move(arr));
  }
  j["classes"] = std::move(classes);
  if (cert.centers) {
    auto arr = nlohmann::json::array();
    for (int v : *cert.centers) arr.push_back(v + 1);
    j["centers"] = std::move(arr);
  } else {
    j["centers"] = nullptr;
  }
  return j;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

Graph load_graph_auto(std::istream& in) {
  // Peek the first non-space character: '{' means JSON.
  char c;
  while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {}
  if (!in) throw std::invalid_argument("empty graph input");
  in.putback(c);
  if (c == '{') {
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
  }
  return parse_dimacs(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return load_graph_auto(in);
}

}  // namespace gcol
