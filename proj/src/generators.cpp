#include "gcol/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcol {

namespace {

// Builds T_k as parent pointers; vertex 0 is the root, children are appended
// recursively in decreasing canonical order (T_(k-1) child first).
void build_binomial(int k, int parent, std::vector<int>& parents,
                    std::vector<int>& orders) {
  int me = static_cast<int>(parents.size());
  parents.push_back(parent);
  orders.push_back(k);
  for (int j = k - 1; j >= 1; --j) build_binomial(j, me, parents, orders);
}

}  // namespace

BinomialTree binomial_tree(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k >= 26) throw CapExceeded("binomial tree size guard: k must be < 26");
  BinomialTree t;
  build_binomial(k, -1, t.parent, t.canonical_order);
  t.graph = Graph(static_cast<int>(t.parent.size()));
  for (int v = 1; v < t.graph.vertex_count(); ++v)
    t.graph.add_edge(v, t.parent[static_cast<std::size_t>(v)]);
  t.root = 0;
  t.graph.set_role(t.root, "root");
  return t;
}

PrunedBinomialTree pruned_binomial_tree(int k, int i, int x_count) {
  if (i < 2 || i > k - 2) throw std::invalid_argument("need 2 <= i <= k-2");
  if (x_count < 0) throw std::invalid_argument("x_count must be non-negative");
  BinomialTree t = binomial_tree(k);
  const int n = t.graph.vertex_count();

  // Eligible X candidates: canonical T_i roots whose parent is a T_(i+1) root.
  VertexSet eligible;
  for (int v = 0; v < n; ++v) {
    int p = t.parent[static_cast<std::size_t>(v)];
    if (p >= 0 && t.canonical_order[static_cast<std::size_t>(v)] == i &&
        t.canonical_order[static_cast<std::size_t>(p)] == i + 1)
      eligible.push_back(v);
  }
  if (x_count > static_cast<int>(eligible.size()))
    throw std::invalid_argument("x_count exceeds the number of eligible roots");

  VertexSet chosen(eligible.begin(), eligible.begin() + x_count);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int x : chosen) {
    // The T_(i-1) child subtree of x occupies a contiguous id range right
    // after x (children were emitted in decreasing order).
    int child = x + 1;
    if (child >= n || t.parent[static_cast<std::size_t>(child)] != x ||
        t.canonical_order[static_cast<std::size_t>(child)] != i - 1)
      throw std::logic_error("pruned tree: unexpected layout");
    int subtree_size = 1 << (i - 2);
    for (int u = child; u < child + subtree_size; ++u)
      removed[static_cast<std::size_t>(u)] = 1;
  }

  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) new_id[static_cast<std::size_t>(v)] = m++;

  PrunedBinomialTree out;
  out.graph = Graph(m);
  out.i = i;
  out.eligible_count = static_cast<int>(eligible.size());
  for (int v = 1; v < n; ++v) {
    if (removed[static_cast<std::size_t>(v)]) continue;
    int p = t.parent[static_cast<std::size_t>(v)];
    if (!removed[static_cast<std::size_t>(p)])
      out.graph.add_edge(new_id[static_cast<std::size_t>(v)],
                         new_id[static_cast<std::size_t>(p)]);
  }
  out.root = new_id[static_cast<std::size_t>(t.root)];
  out.graph.set_role(out.root, "root");
  for (int x : chosen) {
    int nx = new_id[static_cast<std::size_t>(x)];
    out.x_members.push_back(nx);
    out.graph.set_role(nx, "X");
  }
  std::sort(out.x_members.begin(), out.x_members.end());
  return out;
}

HalfGraph half_graph(int t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  HalfGraph h;
  h.graph = Graph(2 * t);
  h.level.assign(static_cast<std::size_t>(2 * t), 0);
  for (int i = 0; i < t; ++i) {
    h.side_a.push_back(i);
    h.side_b.push_back(t + i);
    h.level[static_cast<std::size_t>(i)] = i + 1;
    h.level[static_cast<std::size_t>(t + i)] = i + 1;
    h.graph.set_role(i, "a" + std::to_string(i + 1));
    h.graph.set_role(t + i, "b" + std::to_string(i + 1));
  }
  for (int i = 1; i <= t; ++i)
    for (int j = i + 1; j <= t; ++j) h.graph.add_edge(i - 1, t + j - 1);
  return h;
}

namespace {

HalfGraphPath layered_half_graphs(int l, int t, bool closed) {
  if (l < 1 || t < 1) throw std::invalid_argument("l and t must be positive");
  const int layers = l + 1;
  HalfGraphPath h;
  h.closed = closed;
  h.graph = Graph(layers * t);
  h.level.assign(static_cast<std::size_t>(layers * t), 0);
  h.layers.resize(static_cast<std::size_t>(layers));
  auto id = [t](int layer, int level) { return layer * t + level - 1; };
  for (int layer = 0; layer < layers; ++layer) {
    for (int level = 1; level <= t; ++level) {
      int v = id(layer, level);
      h.layers[static_cast<std::size_t>(layer)].push_back(v);
      h.level[static_cast<std::size_t>(v)] = level;
      h.graph.set_role(v, "H" + std::to_string(layer + 1) + ":" + std::to_string(level));
    }
  }
  for (int layer = 0; layer + 1 < layers; ++layer)
    for (int p = 1; p <= t; ++p)
      for (int q = p + 1; q <= t; ++q) h.graph.add_edge(id(layer, p), id(layer + 1, q));
  if (closed)
    for (int p = 1; p <= t; ++p)
      for (int q = p + 1; q <= t; ++q) h.graph.add_edge(id(layers - 1, p), id(0, q));
  return h;
}

}  // namespace

HalfGraphPath half_graph_path(int l, int t) { return layered_half_graphs(l, t, false); }

HalfGraphPath half_graph_cycle(int l, int t) { return layered_half_graphs(l, t, true); }

Graph anti_matching(int t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  Graph g(2 * t);
  for (int u = 0; u < 2 * t; ++u)
    for (int v = u + 1; v < 2 * t; ++v)
      if (!(u / 2 == v / 2)) g.add_edge(u, v);  // (2i, 2i+1) are the matched pairs
  return g;
}

StarForest star_forest(int count, int leaves) {
  if (count < 1 || leaves < 1) throw std::invalid_argument("count and leaves must be positive");
  StarForest f;
  f.graph = Graph(count * (leaves + 1));
  for (int s = 0; s < count; ++s) {
    int center = s * (leaves + 1);
    f.centers.push_back(center);
    f.graph.set_role(center, "center" + std::to_string(s + 1));
    for (int j = 1; j <= leaves; ++j) f.graph.add_edge(center, center + j);
  }
  return f;
}

T5EdgeTree t5_edge_tree() {
  BinomialTree t5 = binomial_tree(5);
  const int n = t5.graph.vertex_count();
  // beta/gamma: canonical T_2 roots whose parent is a canonical T_3 root.
  // Their single (T_1) child is removed.
  std::vector<int> bgs;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int p = t5.parent[static_cast<std::size_t>(v)];
    if (p >= 0 && t5.canonical_order[static_cast<std::size_t>(v)] == 2 &&
        t5.canonical_order[static_cast<std::size_t>(p)] == 3) {
      bgs.push_back(v);
      removed[static_cast<std::size_t>(v + 1)] = 1;  // its T_1 child
    }
  }
  if (bgs.size() != 2) throw std::logic_error("expected exactly two T_3-rooted T_2 children");
  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) new_id[static_cast<std::size_t>(v)] = m++;
  T5EdgeTree out;
  out.graph = Graph(m);
  out.canonical_order.assign(static_cast<std::size_t>(m), 0);
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)])
      out.canonical_order[static_cast<std::size_t>(new_id[static_cast<std::size_t>(v)])] =
          t5.canonical_order[static_cast<std::size_t>(v)];
  for (int v = 1; v < n; ++v) {
    if (removed[static_cast<std::size_t>(v)]) continue;
    int p = t5.parent[static_cast<std::size_t>(v)];
    out.graph.add_edge(new_id[static_cast<std::size_t>(v)], new_id[static_cast<std::size_t>(p)]);
  }
  out.root = new_id[0];
  out.beta = new_id[static_cast<std::size_t>(bgs[0])];
  out.gamma = new_id[static_cast<std::size_t>(bgs[1])];
  out.graph.set_role(out.root, "root");
  out.graph.set_role(out.beta, "beta");
  out.graph.set_role(out.gamma, "gamma");
  return out;
}

GadgetFamily gadget_family_from_name(const std::string& name) {
  if (name == "binomial-tree") return GadgetFamily::BinomialTree;
  if (name == "pruned-binomial-tree") return GadgetFamily::PrunedBinomialTree;
  if (name == "half-graph") return GadgetFamily::HalfGraph;
  if (name == "half-graph-path") return GadgetFamily::HalfGraphPath;
  if (name == "half-graph-cycle") return GadgetFamily::HalfGraphCycle;
  if (name == "anti-matching") return GadgetFamily::AntiMatching;
  if (name == "star-forest") return GadgetFamily::StarForest;
  if (name == "t5-edge-tree") return GadgetFamily::T5EdgeTree;
  throw std::invalid_argument("unknown gadget family: " + name);
}

const char* gadget_family_name(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::BinomialTree: return "binomial-tree";
    case GadgetFamily::PrunedBinomialTree: return "pruned-binomial-tree";
    case GadgetFamily::HalfGraph: return "half-graph";
    case GadgetFamily::HalfGraphPath: return "half-graph-path";
    case GadgetFamily::HalfGraphCycle: return "half-graph-cycle";
    case GadgetFamily::AntiMatching: return "anti-matching";
    case GadgetFamily::StarForest: return "star-forest";
    case GadgetFamily::T5EdgeTree: return "t5-edge-tree";
  }
  return "?";
}

Graph build_gadget(const GadgetSpec& spec) {
  auto need = [&spec](const std::string& key) {
    auto it = spec.parameters.find(key);
    if (it == spec.parameters.end())
      throw std::invalid_argument("missing gadget parameter: " + key);
    return it->second;
  };
  switch (spec.family) {
    case GadgetFamily::BinomialTree: return binomial_tree(need("k")).graph;
    case GadgetFamily::PrunedBinomialTree:
      return pruned_binomial_tree(need("k"), need("i"), need("x")).graph;
    case GadgetFamily::HalfGraph: return half_graph(need("t")).graph;
    case GadgetFamily::HalfGraphPath: return half_graph_path(need("l"), need("t")).graph;
    case GadgetFamily::HalfGraphCycle: return half_graph_cycle(need("l"), need("t")).graph;
    case GadgetFamily::AntiMatching: return anti_matching(need("t"));
    case GadgetFamily::StarForest: return star_forest(need("count"), need("leaves")).graph;
    case GadgetFamily::T5EdgeTree: return t5_edge_tree().graph;
  }
  throw std::invalid_argument("unknown gadget family");
}

}  // namespace gcol
