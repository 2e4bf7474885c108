#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gcol {

// Vertex ids are dense 0-based ints. File formats are 1-based and converted
// at the io boundary.
using VertexSet = std::vector<int>;  // sorted, no duplicates

// Thrown when a configured enumeration/size cap would be exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an input violates a structural contract it was asserted to
// satisfy (e.g. a K_{t,t} shows up in a graph claimed to be K_{t,t}-free).
struct ContractBreach : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simple undirected graph. Adjacency is kept as sorted neighbor lists for
// deterministic iteration plus a hashed edge set for O(1) membership.
// Instances are treated as immutable once built; all operations on them are
// pure and safe to run concurrently.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  // Appends `count` isolated vertices, returning the first new id.
  int add_vertices(int count) {
    if (count < 0) throw std::invalid_argument("negative vertex count");
    int first = n_;
    n_ += count;
    adj_.resize(static_cast<std::size_t>(n_));
    return first;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (has_edge(u, v)) return;
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    edge_keys_.insert(key(u, v));
    ++m_;
  }

  void remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    erase_sorted(adj_[static_cast<std::size_t>(u)], v);
    erase_sorted(adj_[static_cast<std::size_t>(v)], u);
    edge_keys_.erase(key(u, v));
    --m_;
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return edge_keys_.count(key(u, v)) > 0;
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Per-vertex neighbor bitmasks; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const {
    if (n_ > 64) throw CapExceeded("adjacency masks need n <= 64");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n_), 0);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        masks[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    return masks;
  }

  void set_role(int v, std::string role) {
    check_vertex(v);
    roles_[v] = std::move(role);
  }

  const std::string* role(int v) const {
    auto it = roles_.find(v);
    return it == roles_.end() ? nullptr : &it->second;
  }

  const std::map<int, std::string>& roles() const { return roles_; }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  }

 private:
  static std::uint64_t key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  static void insert_sorted(std::vector<int>& vec, int v) {
    vec.insert(std::lower_bound(vec.begin(), vec.end(), v), v);
  }

  static void erase_sorted(std::vector<int>& vec, int v) {
    auto it = std::lower_bound(vec.begin(), vec.end(), v);
    if (it != vec.end() && *it == v) vec.erase(it);
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::unordered_set<std::uint64_t> edge_keys_;
  std::map<int, std::string> roles_;
};

inline void validate_vertex_set(const Graph& g, const VertexSet& s) {
  int prev = -1;
  for (int v : s) {
    g.check_vertex(v);
    if (v <= prev) throw std::invalid_argument("vertex set not sorted/unique");
    prev = v;
  }
}

inline VertexSet sorted_unique(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline VertexSet full_vertex_set(const Graph& g) {
  VertexSet s(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) s[static_cast<std::size_t>(v)] = v;
  return s;
}

}  // namespace gcol
