#include "gcol/graph_ops.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gcol {

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  InducedSubgraph out;
  out.graph = Graph(static_cast<int>(s.size()));
  out.old_of_new = s;
  out.new_of_old.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    out.new_of_old[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] = i;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    int u = s[static_cast<std::size_t>(i)];
    for (int v : g.neighbors(u)) {
      int j = out.new_of_old[static_cast<std::size_t>(v)];
      if (j > i) out.graph.add_edge(i, j);
    }
    if (const std::string* r = g.role(u)) out.graph.set_role(i, *r);
  }
  return out;
}

TwinClasses false_twin_classes(const Graph& g) {
  TwinClasses out;
  std::map<std::vector<int>, VertexSet> by_nbhd;
  for (int v = 0; v < g.vertex_count(); ++v) by_nbhd[g.neighbors(v)].push_back(v);
  // Deterministic class order: by smallest member.
  std::vector<VertexSet> classes;
  classes.reserve(by_nbhd.size());
  for (auto& [nbhd, members] : by_nbhd) classes.push_back(members);
  std::sort(classes.begin(), classes.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  for (const auto& c : classes) out.representatives.push_back(c.front());
  out.classes = std::move(classes);
  auto ind = induced_subgraph(g, out.representatives);
  out.reduced = std::move(ind.graph);
  out.reduced_of_old.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t ci = 0; ci < out.classes.size(); ++ci) {
    int rep = out.representatives[ci];
    int rid = ind.new_of_old[static_cast<std::size_t>(rep)];
    for (int v : out.classes[ci]) out.reduced_of_old[static_cast<std::size_t>(v)] = rid;
  }
  return out;
}

namespace {

// Enumerates t-subsets of `candidates` recursively, maintaining the common
// neighborhood; prunes when it drops below t.
bool biclique_search(const Graph& g, const VertexSet& candidates, int t,
                     std::size_t start, VertexSet& chosen, VertexSet& common,
                     std::uint64_t& steps, std::uint64_t budget, BicliqueWitness& found) {
  if (static_cast<int>(chosen.size()) == t) {
    VertexSet other;
    for (int v : common)
      if (!std::binary_search(chosen.begin(), chosen.end(), v)) other.push_back(v);
    if (static_cast<int>(other.size()) >= t) {
      found.side_a = chosen;
      found.side_b = VertexSet(other.begin(), other.begin() + t);
      return true;
    }
    return false;
  }
  for (std::size_t i = start; i < candidates.size(); ++i) {
    if (++steps > budget) throw CapExceeded("biclique enumeration budget exceeded");
    int v = candidates[i];
    VertexSet next_common;
    if (chosen.empty()) {
      next_common = g.neighbors(v);
    } else {
      std::set_intersection(common.begin(), common.end(), g.neighbors(v).begin(),
                            g.neighbors(v).end(), std::back_inserter(next_common));
    }
    if (static_cast<int>(next_common.size()) < t) continue;
    chosen.push_back(v);
    std::swap(common, next_common);
    if (biclique_search(g, candidates, t, i + 1, chosen, common, steps, budget, found))
      return true;
    std::swap(common, next_common);
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<BicliqueWitness> has_biclique(const Graph& g, int t, std::uint64_t budget) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  VertexSet candidates;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= t) candidates.push_back(v);
  VertexSet chosen, common;
  BicliqueWitness found;
  std::uint64_t steps = 0;
  if (biclique_search(g, candidates, t, 0, chosen, common, steps, budget, found))
    return found;
  return std::nullopt;
}

namespace {

std::vector<std::pair<int, std::vector<int>>> iso_signature(const LabeledComponent& c) {
  // (degree, flattened label) per vertex, sorted; cheap pre-filter only.
  std::vector<std::pair<int, std::vector<int>>> sig;
  for (int v = 0; v < c.graph.vertex_count(); ++v)
    sig.emplace_back(c.graph.degree(v), c.labels[static_cast<std::size_t>(v)]);
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool iso_backtrack(const LabeledComponent& c1, const LabeledComponent& c2,
                   std::vector<int>& map12, std::vector<char>& used, int v) {
  int n = c1.graph.vertex_count();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    if (c1.graph.degree(v) != c2.graph.degree(w)) continue;
    if (c1.labels[static_cast<std::size_t>(v)] != c2.labels[static_cast<std::size_t>(w)])
      continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (c1.graph.has_edge(u, v) != c2.graph.has_edge(map12[static_cast<std::size_t>(u)], w))
        ok = false;
    if (!ok) continue;
    map12[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = 1;
    if (iso_backtrack(c1, c2, map12, used, v + 1)) return true;
    used[static_cast<std::size_t>(w)] = 0;
  }
  return false;
}

}  // namespace

bool labeled_isomorphic(const LabeledComponent& c1, const LabeledComponent& c2,
                        int size_cap) {
  if (c1.graph.vertex_count() > size_cap || c2.graph.vertex_count() > size_cap)
    throw CapExceeded("labeled_isomorphic size cap exceeded");
  if (c1.graph.vertex_count() != c2.graph.vertex_count()) return false;
  if (c1.graph.edge_count() != c2.graph.edge_count()) return false;
  if (iso_signature(c1) != iso_signature(c2)) return false;
  std::vector<int> map12(static_cast<std::size_t>(c1.graph.vertex_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(c1.graph.vertex_count()), 0);
  return iso_backtrack(c1, c2, map12, used, 0);
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

std::optional<RamseyResult> ramsey_clique_or_independent(const Graph& g, int s,
                                                         bool require_guarantee) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  const double needed = std::pow(2.0, 2 * s - 2);
  if (require_guarantee && g.vertex_count() < needed)
    throw std::invalid_argument("graph too small for guarantee: need n >= 2^(2s-2)");

  VertexSet current = full_vertex_set(g);
  VertexSet clique_pivots, is_pivots;
  while (!current.empty()) {
    int pivot = current.front();
    VertexSet nb, nonnb;
    for (std::size_t i = 1; i < current.size(); ++i) {
      int v = current[i];
      (g.has_edge(pivot, v) ? nb : nonnb).push_back(v);
    }
    if (nb.size() > nonnb.size()) {
      clique_pivots.push_back(pivot);
      current = std::move(nb);
    } else {
      is_pivots.push_back(pivot);
      current = std::move(nonnb);
    }
    if (static_cast<int>(clique_pivots.size()) == s) {
      RamseyResult r{true, clique_pivots};
      if (!is_clique(g, r.members)) throw std::logic_error("ramsey clique failed check");
      return r;
    }
    if (static_cast<int>(is_pivots.size()) == s) {
      RamseyResult r{false, is_pivots};
      if (!is_independent_set(g, r.members))
        throw std::logic_error("ramsey independent set failed check");
      return r;
    }
  }
  if (require_guarantee)
    throw std::logic_error("ramsey guarantee violated despite precondition");
  return std::nullopt;
}

std::vector<VertexSet> components_of_subset(const Graph& g, const VertexSet& subset) {
  validate_vertex_set(g, subset);
  std::vector<char> in_subset(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : subset) in_subset[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexSet> components;
  for (int start : subset) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    VertexSet comp;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (in_subset[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace gcol
