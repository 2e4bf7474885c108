#include "gcol/reductions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "gcol/exact.hpp"
#include "gcol/generators.hpp"
#include "gcol/graph_ops.hpp"

namespace gcol {

// ---------------------------------------------------------------------------
// Instance validation
// ---------------------------------------------------------------------------

namespace {

void check_partition(const Graph& g, const std::vector<VertexSet>& parts) {
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    validate_vertex_set(g, parts[p]);
    for (int v : parts[p]) {
      if (owner[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("parts overlap at vertex " + std::to_string(v));
      owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (owner[static_cast<std::size_t>(v)] == -1)
      throw std::invalid_argument("vertex " + std::to_string(v) + " in no part");
}

}  // namespace

void MisInstance::validate() const {
  if (parts.empty()) throw std::invalid_argument("no parts");
  check_partition(graph, parts);
}

std::optional<VertexSet> multicolored_independent_set(const MisInstance& inst) {
  inst.validate();
  const int k = static_cast<int>(inst.parts.size());
  VertexSet chosen;
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) return true;
    for (int v : inst.parts[static_cast<std::size_t>(i)]) {
      bool ok = true;
      for (int u : chosen)
        if (inst.graph.has_edge(u, v)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(v);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(0)) return sorted_unique(chosen);
  return std::nullopt;
}

void McsiInstance::validate() const {
  check_partition(graph, parts);
  const int k = static_cast<int>(parts.size());
  if (k % 2 != 0) throw std::invalid_argument("k must be even");
  if (pattern.vertex_count() != k)
    throw std::invalid_argument("pattern must have exactly k vertices");
  for (int i = 0; i < k; ++i)
    if (pattern.degree(i) != 3) throw std::invalid_argument("pattern must be 3-regular");
  // No edges between parts that are not pattern-adjacent (including within a part).
  std::vector<int> owner(static_cast<std::size_t>(graph.vertex_count()), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p]) owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
  for (auto [u, v] : graph.edges()) {
    int pu = owner[static_cast<std::size_t>(u)], pv = owner[static_cast<std::size_t>(v)];
    if (pu == pv || !pattern.has_edge(pu, pv))
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") joins parts that are not pattern-adjacent");
  }
}

void GridTilingInstance::validate() const {
  if (k < 2) throw std::invalid_argument("grid tiling needs k >= 2");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (k % 3 == 1)
    throw std::invalid_argument(
        "k = 1 mod 3 breaks the toroidal d_z wiring (the wrap seam shares two "
        "colors); supported k are 2, 3, 5, 6, 8, ...");
  if (static_cast<int>(cells.size()) != k) throw std::invalid_argument("bad cell row count");
  int t = -1;
  for (const auto& row : cells) {
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("bad cell column count");
    for (const auto& cell : row) {
      if (t < 0) t = static_cast<int>(cell.size());
      if (static_cast<int>(cell.size()) != t)
        throw std::invalid_argument("cells must have uniform pair count");
      if (cell.empty()) throw std::invalid_argument("empty cell");
      std::set<std::pair<int, int>> seen;
      for (auto [x, y] : cell) {
        if (x < 1 || x > n || y < 1 || y > n)
          throw std::invalid_argument("pair out of range");
        if (!seen.insert({x, y}).second) throw std::invalid_argument("duplicate pair in cell");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// k-MIS -> Rooted Grundy
// ---------------------------------------------------------------------------

MisReduction reduce_mis_to_rooted_grundy(const MisInstance& inst) {
  inst.validate();
  const int n = inst.graph.vertex_count();
  const int k = static_cast<int>(inst.parts.size());
  MisReduction out;
  out.graph = Graph(n + k + 2);
  for (auto [u, v] : inst.graph.edges()) out.graph.add_edge(u, v);
  out.root = n;
  out.pendant = n + 1;
  out.graph.set_role(out.root, "v");
  out.graph.set_role(out.pendant, "v'");
  out.graph.add_edge(out.root, out.pendant);
  for (int i = 0; i < k; ++i) {
    int vi = n + 2 + i;
    out.selectors.push_back(vi);
    out.graph.set_role(vi, "v" + std::to_string(i + 1));
    for (int u : inst.parts[static_cast<std::size_t>(i)]) out.graph.add_edge(vi, u);
  }
  // Clique C = {v, v_1..v_k}.
  VertexSet clique = out.selectors;
  clique.push_back(out.root);
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      out.graph.add_edge(clique[i], clique[j]);
  out.target = k + 2;
  return out;
}

// ---------------------------------------------------------------------------
// MCSI -> Grundy
// ---------------------------------------------------------------------------

namespace {

int ceil_log2(int k) {
  int q = 0;
  while ((1 << q) < k) ++q;
  return q;
}

// Appends a fourteen-vertex edge tree to `g`, returning its bookkeeping.
McsiTree append_t5_tree(Graph& g, const std::string& tag) {
  T5EdgeTree t = t5_edge_tree();
  McsiTree out;
  int base = g.add_vertices(t.graph.vertex_count());
  for (auto [u, v] : t.graph.edges()) g.add_edge(base + u, base + v);
  for (int v = 0; v < t.graph.vertex_count(); ++v) {
    out.vertices.push_back(base + v);
    out.canonical_order.push_back(t.canonical_order[static_cast<std::size_t>(v)]);
  }
  out.root = base + t.root;
  out.beta = base + t.beta;
  out.gamma = base + t.gamma;
  g.set_role(out.root, "root(" + tag + ")");
  g.set_role(out.beta, "beta(" + tag + ")");
  g.set_role(out.gamma, "gamma(" + tag + ")");
  return out;
}

}  // namespace

McsiReduction reduce_mcsi_to_grundy(const McsiInstance& inst, McsiMode mode) {
  inst.validate();
  const int k = static_cast<int>(inst.parts.size());
  McsiReduction out;
  out.target_q = ceil_log2(k) + 55;
  out.budget_mode = !mode.faithful;

  std::vector<int> part_of(static_cast<std::size_t>(inst.graph.vertex_count()), -1);
  for (int i = 0; i < k; ++i)
    for (int v : inst.parts[static_cast<std::size_t>(i)]) part_of[static_cast<std::size_t>(v)] = i;

  // Position of u inside its part defines the total order <_i.
  std::vector<int> pos_in_part(static_cast<std::size_t>(inst.graph.vertex_count()), -1);
  for (int i = 0; i < k; ++i) {
    const auto& part = inst.parts[static_cast<std::size_t>(i)];
    for (std::size_t idx = 0; idx < part.size(); ++idx)
      pos_in_part[static_cast<std::size_t>(part[idx])] = static_cast<int>(idx);
  }

  out.pattern_neighbors.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto& nb = inst.pattern.neighbors(i);
    out.pattern_neighbors[static_cast<std::size_t>(i)] = {nb[0], nb[1], nb[2]};
  }

  Graph g(0);
  auto fresh = [&g](int count) { return g.add_vertices(count); };

  out.l_vertex.assign(static_cast<std::size_t>(inst.graph.vertex_count()), -1);
  out.r_vertex.assign(static_cast<std::size_t>(inst.graph.vertex_count()), -1);
  out.layers.resize(static_cast<std::size_t>(k));

  // The five layers of each H_i. layer_src[p] holds, per layer vertex, the
  // V_i endpoint whose <_i position decides all half-graph comparisons.
  for (int i = 0; i < k; ++i) {
    const auto& part = inst.parts[static_cast<std::size_t>(i)];
    auto& layers = out.layers[static_cast<std::size_t>(i)];
    std::array<std::vector<int>, 5> layer_src;
    int base = fresh(static_cast<int>(part.size()));
    for (std::size_t idx = 0; idx < part.size(); ++idx) {
      int u = part[idx];
      int lv = base + static_cast<int>(idx);
      out.l_vertex[static_cast<std::size_t>(u)] = lv;
      layers[0].push_back(lv);
      layer_src[0].push_back(u);
      g.set_role(lv, "l(" + std::to_string(u) + ")");
    }
    for (int p = 0; p < 3; ++p) {
      int ip = out.pattern_neighbors[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
      // Edges of E(V_i, V_{i(p)}) sorted by (u, v).
      std::vector<std::pair<int, int>> cross;
      for (int u : part)
        for (int w : inst.graph.neighbors(u))
          if (part_of[static_cast<std::size_t>(w)] == ip) cross.emplace_back(u, w);
      std::sort(cross.begin(), cross.end());
      int zbase = fresh(static_cast<int>(cross.size()));
      for (std::size_t idx = 0; idx < cross.size(); ++idx) {
        int zv = zbase + static_cast<int>(idx);
        out.z_vertex[cross[idx]] = zv;
        layers[static_cast<std::size_t>(p + 1)].push_back(zv);
        layer_src[static_cast<std::size_t>(p + 1)].push_back(cross[idx].first);
        g.set_role(zv, "z(" + std::to_string(cross[idx].first) + "," +
                           std::to_string(cross[idx].second) + ")");
      }
    }
    int rbase = fresh(static_cast<int>(part.size()));
    for (std::size_t idx = 0; idx < part.size(); ++idx) {
      int u = part[idx];
      int rv = rbase + static_cast<int>(idx);
      out.r_vertex[static_cast<std::size_t>(u)] = rv;
      layers[4].push_back(rv);
      layer_src[4].push_back(u);
      g.set_role(rv, "r(" + std::to_string(u) + ")");
    }

    auto upos = [&](int u) { return pos_in_part[static_cast<std::size_t>(u)]; };
    for (int p = 0; p < 4; ++p) {
      const auto& cur = layers[static_cast<std::size_t>(p)];
      const auto& nxt = layers[static_cast<std::size_t>(p + 1)];
      for (std::size_t a = 0; a < cur.size(); ++a)
        for (std::size_t b = 0; b < nxt.size(); ++b)
          if (upos(layer_src[static_cast<std::size_t>(p)][a]) <
              upos(layer_src[static_cast<std::size_t>(p + 1)][b]))
            g.add_edge(cur[a], nxt[b]);
    }
  }

  // Vertex trees: one per original vertex, beta -> l(u), gamma -> r(u).
  for (int u = 0; u < inst.graph.vertex_count(); ++u) {
    McsiTree tree = append_t5_tree(g, "u" + std::to_string(u));
    tree.src_u = u;
    tree.attach_beta = out.l_vertex[static_cast<std::size_t>(u)];
    tree.attach_gamma = out.r_vertex[static_cast<std::size_t>(u)];
    g.add_edge(tree.beta, tree.attach_beta);
    g.add_edge(tree.gamma, tree.attach_gamma);
    out.vertex_trees.push_back(std::move(tree));
  }

  // Edge trees: one per cross edge uv (u < v), beta -> z(u,v), gamma -> z(v,u).
  std::vector<std::pair<int, int>> cross_edges = inst.graph.edges();
  std::sort(cross_edges.begin(), cross_edges.end());
  for (auto [u, v] : cross_edges) {
    McsiTree tree = append_t5_tree(g, "e" + std::to_string(u) + "," + std::to_string(v));
    tree.src_u = u;
    tree.src_v = v;
    tree.attach_beta = out.z_vertex.at({u, v});
    tree.attach_gamma = out.z_vertex.at({v, u});
    g.add_edge(tree.beta, tree.attach_beta);
    g.add_edge(tree.gamma, tree.attach_gamma);
    out.edge_trees.push_back(std::move(tree));
  }

  // Top tree. 2.5k color-6 vertices (children of color-7 vertices) map to
  // V(H) then E(H); their T_5 child subtrees are removed and each f vertex is
  // linked to the roots of the corresponding tree family.
  const int f_count = k + static_cast<int>(inst.pattern.edge_count());
  std::vector<std::pair<int, int>> pattern_edges = inst.pattern.edges();
  std::sort(pattern_edges.begin(), pattern_edges.end());

  out.summary.q = out.target_q;
  out.summary.f_vertex_count = f_count;
  out.summary.total_vertices = BigInt(1) << (out.target_q - 1);
  out.summary.color7_vertices = BigInt(1) << (out.target_q - 8);
  out.summary.removed_vertices = BigInt(16) * f_count;

  std::vector<int> f_ids;
  if (mode.faithful) {
    // Lazy top tree: only the f frontier is materialized.
    int base = fresh(f_count);
    for (int idx = 0; idx < f_count; ++idx) f_ids.push_back(base + idx);
    out.summary.lazy_vertices =
        out.summary.total_vertices - out.summary.removed_vertices - f_count;
  } else {
    if (mode.budget_q < 12 || mode.budget_q > 16)
      throw CapExceeded("budget top tree needs 12 <= q' <= 16");
    if ((1 << (mode.budget_q - 8)) < f_count)
      throw std::invalid_argument("budget q' too small for 2.5k color-6 vertices");
    out.target_q = mode.budget_q;
    out.summary.q = mode.budget_q;
    out.summary.total_vertices = BigInt(1) << (mode.budget_q - 1);
    out.summary.color7_vertices = BigInt(1) << (mode.budget_q - 8);
    out.summary.lazy_vertices = 0;
    BinomialTree tq = binomial_tree(mode.budget_q);
    const int tn = tq.graph.vertex_count();
    // Candidate f vertices: canonical T_6 roots under T_7 roots.
    std::vector<int> candidates;
    for (int v = 0; v < tn; ++v) {
      int p = tq.parent[static_cast<std::size_t>(v)];
      if (p >= 0 && tq.canonical_order[static_cast<std::size_t>(v)] == 6 &&
          tq.canonical_order[static_cast<std::size_t>(p)] == 7)
        candidates.push_back(v);
    }
    std::vector<char> removed(static_cast<std::size_t>(tn), 0);
    for (int idx = 0; idx < f_count; ++idx) {
      int fv = candidates[static_cast<std::size_t>(idx)];
      // Its T_5 child subtree occupies the contiguous range right after it.
      for (int u = fv + 1; u <= fv + 16; ++u) removed[static_cast<std::size_t>(u)] = 1;
    }
    std::vector<int> new_id(static_cast<std::size_t>(tn), -1);
    int kept = 0;
    for (int v = 0; v < tn; ++v)
      if (!removed[static_cast<std::size_t>(v)]) ++kept;
    int base = fresh(kept);
    int next = base;
    for (int v = 0; v < tn; ++v)
      if (!removed[static_cast<std::size_t>(v)]) new_id[static_cast<std::size_t>(v)] = next++;
    for (int v = 1; v < tn; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      int p = tq.parent[static_cast<std::size_t>(v)];
      if (!removed[static_cast<std::size_t>(p)])
        g.add_edge(new_id[static_cast<std::size_t>(v)], new_id[static_cast<std::size_t>(p)]);
    }
    out.top_root = new_id[0];
    g.set_role(out.top_root, "Tq-root");
    for (int idx = 0; idx < f_count; ++idx)
      f_ids.push_back(new_id[static_cast<std::size_t>(candidates[static_cast<std::size_t>(idx)])]);
  }

  for (int i = 0; i < k; ++i) {
    int fv = f_ids[static_cast<std::size_t>(i)];
    out.f_of_part.push_back(fv);
    g.set_role(fv, "f(" + std::to_string(i + 1) + ")");
    out.provenance["f(" + std::to_string(i + 1) + ")"] = "pattern vertex " + std::to_string(i + 1);
    for (const auto& tree : out.vertex_trees)
      if (part_of[static_cast<std::size_t>(tree.src_u)] == i) g.add_edge(fv, tree.root);
  }
  for (std::size_t e = 0; e < pattern_edges.size(); ++e) {
    auto [pi, pj] = pattern_edges[e];
    int fv = f_ids[static_cast<std::size_t>(k + static_cast<int>(e))];
    out.f_of_pattern_edge[{pi, pj}] = fv;
    g.set_role(fv, "f(" + std::to_string(pi + 1) + "," + std::to_string(pj + 1) + ")");
    out.provenance["f(" + std::to_string(pi + 1) + "," + std::to_string(pj + 1) + ")"] =
        "pattern edge {" + std::to_string(pi + 1) + "," + std::to_string(pj + 1) + "}";
    for (const auto& tree : out.edge_trees) {
      int a = part_of[static_cast<std::size_t>(tree.src_u)];
      int b = part_of[static_cast<std::size_t>(tree.src_v)];
      if (a > b) std::swap(a, b);
      if (a == pi && b == pj) g.add_edge(fv, tree.root);
    }
  }

  out.graph = std::move(g);
  return out;
}

McsiCertificate mcsi_solution_certificate(const McsiInstance& inst,
                                          const McsiReduction& red,
                                          const std::vector<int>& solution) {
  inst.validate();
  const int k = static_cast<int>(inst.parts.size());
  if (static_cast<int>(solution.size()) != k)
    throw std::invalid_argument("solution must pick one vertex per part");
  for (int i = 0; i < k; ++i) {
    int v = solution[static_cast<std::size_t>(i)];
    if (!std::binary_search(inst.parts[static_cast<std::size_t>(i)].begin(),
                            inst.parts[static_cast<std::size_t>(i)].end(), v))
      throw std::invalid_argument("solution vertex " + std::to_string(v) +
                                  " is not in part " + std::to_string(i + 1));
  }
  for (auto [pi, pj] : inst.pattern.edges()) {
    int u = solution[static_cast<std::size_t>(pi)], v = solution[static_cast<std::size_t>(pj)];
    if (!inst.graph.has_edge(u, v))
      throw std::invalid_argument("pattern edge {" + std::to_string(pi + 1) + "," +
                                  std::to_string(pj + 1) + "} not realized: no edge (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
  }

  McsiCertificate out;
  for (int i = 0; i < k; ++i) {
    int u = solution[static_cast<std::size_t>(i)];
    out.color1_set.push_back(red.l_vertex[static_cast<std::size_t>(u)]);
    out.color1_set.push_back(red.r_vertex[static_cast<std::size_t>(u)]);
  }
  for (auto [pi, pj] : inst.pattern.edges()) {
    int u = solution[static_cast<std::size_t>(pi)], v = solution[static_cast<std::size_t>(pj)];
    out.color1_set.push_back(red.z_vertex.at({u, v}));
    out.color1_set.push_back(red.z_vertex.at({v, u}));
  }
  out.color1_set = sorted_unique(std::move(out.color1_set));
  if (!is_independent_set(red.graph, out.color1_set))
    throw std::logic_error("selected role vertices are not independent");

  // Rooted certificates: the trees whose beta/gamma attachments are selected
  // role vertices reach color 5 at their root.
  auto make_tree_cert = [&](const McsiTree& tree) {
    std::vector<VertexSet> classes(5);
    for (std::size_t idx = 0; idx < tree.vertices.size(); ++idx)
      classes[static_cast<std::size_t>(tree.canonical_order[idx] - 1)].push_back(
          tree.vertices[idx]);
    classes[0].push_back(tree.attach_beta);
    classes[0].push_back(tree.attach_gamma);
    auto cert = certificate_from_classes(WitnessKind::Grundy, std::move(classes),
                                         std::nullopt);
    if (auto r = verify_grundy(red.graph, cert); !r)
      throw std::logic_error("tree certificate failed: " + r.reason);
    // Independent confirmation on the tree-plus-attachment neighborhood.
    VertexSet hood = tree.vertices;
    hood.push_back(tree.attach_beta);
    hood.push_back(tree.attach_gamma);
    hood = sorted_unique(std::move(hood));
    auto ind = induced_subgraph(red.graph, hood);
    int rooted = rooted_grundy(ind.graph, ind.new_of_old[static_cast<std::size_t>(tree.root)]);
    if (rooted != 5)
      throw std::logic_error("tree root does not reach color 5 (got " +
                             std::to_string(rooted) + ")");
    return cert;
  };

  for (int i = 0; i < k; ++i) {
    int u = solution[static_cast<std::size_t>(i)];
    out.tree_certificates.push_back(make_tree_cert(red.vertex_trees[static_cast<std::size_t>(u)]));
  }
  for (const auto& tree : red.edge_trees) {
    bool in_solution = false;
    for (auto [pi, pj] : inst.pattern.edges()) {
      int u = solution[static_cast<std::size_t>(pi)], v = solution[static_cast<std::size_t>(pj)];
      if ((tree.src_u == u && tree.src_v == v) || (tree.src_u == v && tree.src_v == u))
        in_solution = true;
    }
    if (in_solution) out.tree_certificates.push_back(make_tree_cert(tree));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic Grid Tiling -> b-Chromatic Core
// ---------------------------------------------------------------------------

// The d_z wiring is seam-derived: the vertical seam i -> i+1 of column j
// carries the color of the j-triple {3(j mod 3)+1..+3} at position (i+1)
// mod 3, horizontal seams the i-triple offset by 9. B_{i,j} is linked to the
// colors of its four incident seams. For k = 0 mod 3 this reproduces the
// pair/succ index pattern exactly; for k = 2 mod 3 it extends it coherently
// around the wrap (k = 1 mod 3 has no coherent wiring and is refused).

int vertical_seam_color(int i, int j) { return 3 * (j % 3) + ((i + 1) % 3) + 1; }
int horizontal_seam_color(int i, int j) { return 3 * (i % 3) + ((j + 1) % 3) + 10; }

std::array<int, 4> dz_links(int i, int j, int k) {
  return {vertical_seam_color((i + k - 1) % k, j), vertical_seam_color(i, j),
          horizontal_seam_color(i, (j + k - 1) % k), horizontal_seam_color(i, j)};
}

std::string dz_audit_table(int k) {
  std::ostringstream out;
  out << "d_z wiring audit, k=" << k << "\n";
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      auto links = dz_links(i, j, k);
      std::sort(links.begin(), links.end());
      out << "B(" << (i + 1) << "," << (j + 1) << ") <- d{";
      for (std::size_t idx = 0; idx < links.size(); ++idx)
        out << (idx ? "," : "") << links[idx];
      out << "}\n";
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      out << "H(" << (i + 1) << "->" << (i + 1) % k + 1 << "," << (j + 1) << ") misses {"
          << vertical_seam_color(i, j) << "}  H(" << (i + 1) << "," << (j + 1) << "->"
          << (j + 1) % k + 1 << ") misses {" << horizontal_seam_color(i, j) << "}\n";
    }
  return out.str();
}

const BcoreHalfGraph& BcoreReduction::hg(bool vertical, int i, int j) const {
  int k = static_cast<int>(a.size());
  std::size_t idx = static_cast<std::size_t>((vertical ? 0 : k * k) + i * k + j);
  return half_graphs[idx];
}

BcoreReduction reduce_gridtiling_to_bcore(const GridTilingInstance& inst) {
  inst.validate();
  const int k = inst.k;
  const int t = inst.pair_count();
  BcoreReduction out;
  out.q = 14 * k * k;
  const int q = out.q;
  const int clique_size = q - k * k;
  if (clique_size < 33) throw std::logic_error("clique too small for the 33 distinguished");
  if (q - 9 < 1) throw std::logic_error("q too small");

  Graph g(0);
  auto fresh = [&g](int count) { return g.add_vertices(count); };

  // Per-cell bicliques K_{t, q-9}.
  out.a.assign(static_cast<std::size_t>(k), std::vector<VertexSet>(static_cast<std::size_t>(k)));
  out.b.assign(static_cast<std::size_t>(k), std::vector<VertexSet>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int abase = fresh(t);
      for (int idx = 0; idx < t; ++idx) {
        int av = abase + idx;
        out.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(av);
        auto [x, y] = inst.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                [static_cast<std::size_t>(idx)];
        g.set_role(av, "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "):(" +
                           std::to_string(x) + "," + std::to_string(y) + ")");
      }
      int bbase = fresh(q - 9);
      for (int idx = 0; idx < q - 9; ++idx) {
        int bv = bbase + idx;
        out.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(bv);
        g.set_role(bv, "b(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "):" +
                           std::to_string(idx + 1));
      }
      for (int av : out.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        for (int bv : out.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          g.add_edge(av, bv);
    }

  // Half-graphs: k^2 vertical (levels by y), then k^2 horizontal (levels by x).
  auto add_half_graph = [&](bool vertical, int i, int j) {
    BcoreHalfGraph hg;
    hg.vertical = vertical;
    hg.i = i;
    hg.j = j;
    int i2 = vertical ? (i + 1) % k : i;
    int j2 = vertical ? j : (j + 1) % k;
    std::string name = vertical ? "hv(" + std::to_string(i + 1) + "->" + std::to_string(i2 + 1) +
                                      "," + std::to_string(j + 1) + ")"
                                : "hh(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      "->" + std::to_string(j2 + 1) + ")";
    int sbase = fresh(t);
    for (int idx = 0; idx < t; ++idx) {
      hg.src.push_back(sbase + idx);
      g.set_role(sbase + idx, name + "src:" + std::to_string(idx + 1));
    }
    int tbase = fresh(t);
    for (int idx = 0; idx < t; ++idx) {
      hg.tgt.push_back(tbase + idx);
      g.set_role(tbase + idx, name + "tgt:" + std::to_string(idx + 1));
    }
    auto level = [&](int i_, int j_, int idx) {
      auto [x, y] = inst.cells[static_cast<std::size_t>(i_)][static_cast<std::size_t>(j_)]
                              [static_cast<std::size_t>(idx)];
      return vertical ? y : x;
    };
    for (int s = 0; s < t; ++s)
      for (int u = 0; u < t; ++u)
        if (level(i, j, s) < level(i2, j2, u)) g.add_edge(hg.src[s], hg.tgt[u]);
    // Correspondence edges into the A sets.
    for (int idx = 0; idx < t; ++idx) {
      g.add_edge(hg.src[idx],
                 out.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][idx]);
      g.add_edge(hg.tgt[idx],
                 out.a[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)][idx]);
    }
    // The seam color is shared by both adjacent B sets and is the one d_z
    // NOT linked to this half-graph.
    hg.missing_z = vertical ? vertical_seam_color(i, j) : horizontal_seam_color(i, j);
    auto la = dz_links(i, j, k), lb = dz_links(i2, j2, k);
    if (std::find(la.begin(), la.end(), hg.missing_z) == la.end() ||
        std::find(lb.begin(), lb.end(), hg.missing_z) == lb.end())
      throw std::logic_error("seam color is not shared by its two B sets");
    out.half_graphs.push_back(std::move(hg));
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) add_half_graph(true, i, j);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) add_half_graph(false, i, j);

  // Global clique with its distinguished vertices and private pendants.
  int cbase = fresh(clique_size);
  for (int c = 0; c < clique_size; ++c) {
    out.clique.push_back(cbase + c);
    for (int c2 = 0; c2 < c; ++c2) g.add_edge(cbase + c, cbase + c2);
  }
  for (int z = 1; z <= 18; ++z) {
    out.d.push_back(out.clique[static_cast<std::size_t>(z - 1)]);
    g.set_role(out.clique[static_cast<std::size_t>(z - 1)], "d" + std::to_string(z));
  }
  for (int idx = 0; idx < 5; ++idx) {
    out.c_prime.push_back(out.clique[static_cast<std::size_t>(18 + idx)]);
    out.c_minus.push_back(out.clique[static_cast<std::size_t>(23 + idx)]);
    out.c_plus.push_back(out.clique[static_cast<std::size_t>(28 + idx)]);
    g.set_role(out.clique[static_cast<std::size_t>(18 + idx)], "C':" + std::to_string(idx + 1));
    g.set_role(out.clique[static_cast<std::size_t>(23 + idx)], "C-:" + std::to_string(idx + 1));
    g.set_role(out.clique[static_cast<std::size_t>(28 + idx)], "C+:" + std::to_string(idx + 1));
  }
  for (int c = 33; c < clique_size; ++c)
    g.set_role(out.clique[static_cast<std::size_t>(c)], "C:" + std::to_string(c + 1));
  out.pendants.resize(static_cast<std::size_t>(clique_size));
  for (int c = 0; c < clique_size; ++c) {
    int pbase = fresh(k * k);
    for (int idx = 0; idx < k * k; ++idx) {
      out.pendants[static_cast<std::size_t>(c)].push_back(pbase + idx);
      g.set_role(pbase + idx, "p(" + std::to_string(c + 1) + "):" + std::to_string(idx + 1));
      g.add_edge(out.clique[static_cast<std::size_t>(c)], pbase + idx);
    }
  }

  // d_z saturation of the B sets.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int z : dz_links(i, j, k))
        for (int bv : out.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          g.add_edge(out.d[static_cast<std::size_t>(z - 1)], bv);

  // Half-graphs are fully linked to D minus their missing color, their source
  // sides to C- and target sides to C+; every A set is fully linked to C'.
  for (const auto& hg : out.half_graphs) {
    for (int z = 1; z <= 18; ++z) {
      if (z == hg.missing_z) continue;
      for (int v : hg.src) g.add_edge(out.d[static_cast<std::size_t>(z - 1)], v);
      for (int v : hg.tgt) g.add_edge(out.d[static_cast<std::size_t>(z - 1)], v);
    }
    for (int cm : out.c_minus)
      for (int v : hg.src) g.add_edge(cm, v);
    for (int cp : out.c_plus)
      for (int v : hg.tgt) g.add_edge(cp, v);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int cp : out.c_prime)
        for (int av : out.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          g.add_edge(cp, av);

  out.provenance["q"] = std::to_string(q);
  out.provenance["clique"] = "colors 1.." + std::to_string(clique_size);
  out.provenance["D"] = "colors 1..18";
  out.provenance["C'"] = "colors 19..23";
  out.provenance["C-"] = "colors 24..28";
  out.provenance["C+"] = "colors 29..33";
  out.graph = std::move(g);
  return out;
}

WitnessCertificate gridtiling_certificate(
    const GridTilingInstance& inst, const BcoreReduction& red,
    const std::vector<std::vector<std::pair<int, int>>>& solution) {
  inst.validate();
  const int k = inst.k;
  const int q = red.q;
  if (static_cast<int>(solution.size()) != k)
    throw std::invalid_argument("solution must have k rows");
  std::vector<std::vector<int>> idx(static_cast<std::size_t>(k),
                                    std::vector<int>(static_cast<std::size_t>(k), -1));
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(solution[static_cast<std::size_t>(i)].size()) != k)
      throw std::invalid_argument("solution row must have k entries");
    for (int j = 0; j < k; ++j) {
      const auto& cell = inst.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      auto it = std::find(cell.begin(), cell.end(),
                          solution[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      if (it == cell.end())
        throw std::invalid_argument("solution pair for cell (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") is not in P");
      idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<int>(it - cell.begin());
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto [x, y] = solution[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      auto [xr, yr] = solution[static_cast<std::size_t>(i)][static_cast<std::size_t>((j + 1) % k)];
      if (x != xr)
        throw std::invalid_argument("tiling constraint violated between cells (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") and (" + std::to_string(i + 1) + "," +
                                    std::to_string((j + 1) % k + 1) + "): x differs");
      auto [xd, yd] = solution[static_cast<std::size_t>((i + 1) % k)][static_cast<std::size_t>(j)];
      if (y != yd)
        throw std::invalid_argument("tiling constraint violated between cells (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") and (" + std::to_string((i + 1) % k + 1) + "," +
                                    std::to_string(j + 1) + "): y differs");
    }

  const int clique_size = q - k * k;
  std::vector<int> color(static_cast<std::size_t>(red.graph.vertex_count()), 0);
  // Clique vertex c-1 takes color c; its pendants take the top k^2 colors.
  for (int c = 1; c <= clique_size; ++c) {
    color[static_cast<std::size_t>(red.clique[static_cast<std::size_t>(c - 1)])] = c;
    const auto& ps = red.pendants[static_cast<std::size_t>(c - 1)];
    for (int p = 0; p < k * k; ++p)
      color[static_cast<std::size_t>(ps[static_cast<std::size_t>(p)])] = clique_size + 1 + p;
  }
  // Selected A vertices take the top k^2 colors, row-major.
  std::vector<int> center_of_class(static_cast<std::size_t>(q) + 1, -1);
  for (int c = 1; c <= clique_size; ++c)
    center_of_class[static_cast<std::size_t>(c)] =
        red.clique[static_cast<std::size_t>(c - 1)];
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int cstar = clique_size + 1 + i * k + j;
      int av = red.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                    [static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]
                                                 [static_cast<std::size_t>(j)])];
      color[static_cast<std::size_t>(av)] = cstar;
      center_of_class[static_cast<std::size_t>(cstar)] = av;
      // B gets every color except C' (19..23), the four D_{i,j} colors and
      // the center's own color; one fewer color than vertices, so the first
      // is used twice (B is independent).
      auto links = dz_links(i, j, k);
      std::vector<char> banned(static_cast<std::size_t>(q) + 1, 0);
      for (int z : links) banned[static_cast<std::size_t>(z)] = 1;
      for (int c = 19; c <= 23; ++c) banned[static_cast<std::size_t>(c)] = 1;
      banned[static_cast<std::size_t>(cstar)] = 1;
      std::vector<int> bcolors;
      for (int c = 1; c <= q; ++c)
        if (!banned[static_cast<std::size_t>(c)]) bcolors.push_back(c);
      const auto& bs = red.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (std::size_t p = 0; p < bs.size(); ++p)
        color[static_cast<std::size_t>(bs[p])] =
            p < bcolors.size() ? bcolors[p] : bcolors.front();
    }
  // Half-graph correspondents of the selected pairs take the missing color.
  for (const auto& hg : red.half_graphs) {
    int i2 = hg.vertical ? (hg.i + 1) % k : hg.i;
    int j2 = hg.vertical ? hg.j : (hg.j + 1) % k;
    int src_idx = idx[static_cast<std::size_t>(hg.i)][static_cast<std::size_t>(hg.j)];
    int tgt_idx = idx[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)];
    color[static_cast<std::size_t>(hg.src[static_cast<std::size_t>(src_idx)])] = hg.missing_z;
    color[static_cast<std::size_t>(hg.tgt[static_cast<std::size_t>(tgt_idx)])] = hg.missing_z;
  }

  std::vector<VertexSet> classes(static_cast<std::size_t>(q));
  for (int v = 0; v < red.graph.vertex_count(); ++v)
    if (color[static_cast<std::size_t>(v)] > 0)
      classes[static_cast<std::size_t>(color[static_cast<std::size_t>(v)] - 1)].push_back(v);
  std::vector<int> centers(center_of_class.begin() + 1, center_of_class.end());
  auto cert = certificate_from_classes(WitnessKind::BColoring, std::move(classes),
                                       std::move(centers));
  if (auto r = verify_b_coloring(red.graph, cert); !r)
    throw std::logic_error("grid tiling certificate failed verification: " + r.reason);
  return cert;
}

// ---------------------------------------------------------------------------
// JSON schemas
// ---------------------------------------------------------------------------

MisInstance mis_from_json(const nlohmann::json& j) {
  MisInstance inst;
  inst.graph = Graph(j.at("n").get<int>());
  for (const auto& e : j.at("edges"))
    inst.graph.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1);
  for (const auto& part : j.at("parts")) {
    VertexSet p;
    for (const auto& v : part) p.push_back(v.get<int>() - 1);
    inst.parts.push_back(sorted_unique(std::move(p)));
  }
  inst.validate();
  return inst;
}

McsiInstance mcsi_from_json(const nlohmann::json& j) {
  McsiInstance inst;
  inst.graph = Graph(j.at("n").get<int>());
  for (const auto& e : j.at("edges"))
    inst.graph.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1);
  for (const auto& part : j.at("parts")) {
    VertexSet p;
    for (const auto& v : part) p.push_back(v.get<int>() - 1);
    inst.parts.push_back(sorted_unique(std::move(p)));
  }
  inst.pattern = Graph(static_cast<int>(inst.parts.size()));
  for (const auto& e : j.at("pattern_edges"))
    inst.pattern.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1);
  inst.validate();
  return inst;
}

GridTilingInstance gridtiling_from_json(const nlohmann::json& j) {
  GridTilingInstance inst;
  inst.k = j.at("k").get<int>();
  inst.n = j.at("n").get<int>();
  const auto& cells = j.at("cells");
  if (static_cast<int>(cells.size()) != inst.k * inst.k)
    throw std::invalid_argument("cells must list k*k entries row-major");
  inst.cells.assign(static_cast<std::size_t>(inst.k),
                    std::vector<std::vector<std::pair<int, int>>>(
                        static_cast<std::size_t>(inst.k)));
  for (int i = 0; i < inst.k; ++i)
    for (int j2 = 0; j2 < inst.k; ++j2) {
      const auto& cell = cells[static_cast<std::size_t>(i * inst.k + j2)];
      for (const auto& pair : cell)
        inst.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)].emplace_back(
            pair[0].get<int>(), pair[1].get<int>());
    }
  inst.validate();
  return inst;
}

}  // namespace gcol
