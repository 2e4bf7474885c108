#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "gcol/coloring.hpp"
#include "gcol/graph.hpp"

namespace gcol {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Source instances
// ---------------------------------------------------------------------------

struct MisInstance {
  Graph graph;
  std::vector<VertexSet> parts;  // partition of V, possibly with empty parts
  void validate() const;
};

// Exhaustive oracle: is there an independent set with one vertex per part?
std::optional<VertexSet> multicolored_independent_set(const MisInstance& inst);

struct McsiInstance {
  Graph graph;
  std::vector<VertexSet> parts;
  Graph pattern;  // on [k], 3-regular; k even
  void validate() const;
};

struct GridTilingInstance {
  int k = 0;
  int n = 0;
  // cells[i][j] = list of (x,y) pairs over [1..n]^2, uniform size t, i,j 0-based.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> cells;
  int pair_count() const { return cells.empty() ? 0 : static_cast<int>(cells[0][0].size()); }
  void validate() const;
};

// ---------------------------------------------------------------------------
// k-MIS -> Rooted Grundy (clique-plus-pendant construction)
// ---------------------------------------------------------------------------

struct MisReduction {
  Graph graph;
  int root = 0;     // the distinguished clique vertex v
  int pendant = 0;  // its pendant neighbor v'
  VertexSet selectors;  // v_1..v_k, selector i joined to part i
  int target = 0;       // k + 2
};

MisReduction reduce_mis_to_rooted_grundy(const MisInstance& inst);

// ---------------------------------------------------------------------------
// MCSI -> Grundy
// ---------------------------------------------------------------------------

struct McsiMode {
  bool faithful = true;
  int budget_q = 0;  // budget mode: materialize T_{budget_q} (<= 16); not
                     // equivalence-preserving, flagged in the output
  static McsiMode Faithful() { return {true, 0}; }
  static McsiMode Budget(int q) { return {false, q}; }
};

// Bookkeeping for the lazily represented top tree in faithful mode: the
// full T_q is astronomically large, so only the surgered frontier (the f
// vertices) is materialized and the rest is carried as exact counts.
struct TopTreeSummary {
  int q = 0;
  BigInt total_vertices;     // 2^(q-1)
  BigInt color7_vertices;    // 2^(q-8), each with a color-6 child
  int f_vertex_count = 0;    // 2.5k vertices mapped to V(H) + E(H)
  BigInt removed_vertices;   // f_vertex_count * |T_5|
  BigInt lazy_vertices;      // tree vertices not materialized
};

struct McsiTree {
  int root = 0, beta = 0, gamma = 0;
  VertexSet vertices;
  std::vector<int> canonical_order;  // aligned with `vertices`
  int attach_beta = -1, attach_gamma = -1;
  int src_u = -1, src_v = -1;  // original ids; src_v < 0 for a vertex tree
};

struct McsiReduction {
  Graph graph;
  int target_q = 0;
  bool budget_mode = false;
  TopTreeSummary summary;
  // Per part i: the five layers L_i, V_{i,i(1)}, V_{i,i(2)}, V_{i,i(3)}, R_i.
  std::vector<std::array<VertexSet, 5>> layers;
  std::vector<std::array<int, 3>> pattern_neighbors;  // i(1), i(2), i(3) per part
  std::vector<int> l_vertex, r_vertex;                // by original vertex id
  std::map<std::pair<int, int>, int> z_vertex;        // ordered (u,v) -> z(u,v)
  std::vector<McsiTree> vertex_trees;                 // by original vertex id
  std::vector<McsiTree> edge_trees;                   // by cross edge, sorted
  std::vector<int> f_of_part;                         // f(i)
  std::map<std::pair<int, int>, int> f_of_pattern_edge;  // f(ij), i<j
  std::map<std::string, std::string> provenance;
  int top_root = -1;  // budget mode only
};

McsiReduction reduce_mcsi_to_grundy(const McsiInstance& inst,
                                    McsiMode mode = McsiMode::Faithful());

struct McsiCertificate {
  VertexSet color1_set;  // all selected role vertices, an independent set
  std::vector<WitnessCertificate> tree_certificates;  // root colored 5 each
};

// Forward transpiler: turns a valid MCSI solution (one vertex per part) into
// verified sub-certificates on the reduction output.
McsiCertificate mcsi_solution_certificate(const McsiInstance& inst,
                                          const McsiReduction& red,
                                          const std::vector<int>& solution);

// ---------------------------------------------------------------------------
// Cyclic Grid Tiling -> b-Chromatic Core
// ---------------------------------------------------------------------------

struct BcoreHalfGraph {
  bool vertical = false;  // vertical: levels compared by y; horizontal: by x
  int i = 0, j = 0;       // source cell, 0-based
  VertexSet src;          // corresponds to A_{i,j}
  VertexSet tgt;          // corresponds to A_{i+1,j} / A_{i,j+1}
  int missing_z = 0;      // the unique z in [1,18] not linked to this half-graph
};

struct BcoreReduction {
  Graph graph;
  int q = 0;  // 14 k^2
  std::vector<std::vector<VertexSet>> a;  // a[i][j], aligned with cells[i][j]
  std::vector<std::vector<VertexSet>> b;  // b[i][j], q-9 vertices each
  std::vector<BcoreHalfGraph> half_graphs;  // k^2 vertical then k^2 horizontal
  VertexSet clique;                         // ordered by intended color 1..q-k^2
  VertexSet d;                              // d_1..d_18 = clique[0..17]
  VertexSet c_prime, c_minus, c_plus;       // clique[18..22], [23..27], [28..32]
  std::vector<VertexSet> pendants;          // per clique vertex, k^2 each
  std::map<std::string, std::string> provenance;

  const BcoreHalfGraph& hg(bool vertical, int i, int j) const;
};

// The four z in [1,18] whose d_z is fully linked to B_{i,j} (0-based i,j):
// the colors of the cell's four incident seams.
std::array<int, 4> dz_links(int i, int j, int k);

// Printable audit of the d_z wiring (Fig-4-style): per-cell link sets and
// per-half-graph missing colors.
std::string dz_audit_table(int k);

BcoreReduction reduce_gridtiling_to_bcore(const GridTilingInstance& inst);

// Turns a valid cyclic tiling solution (pair chosen per cell, row-major)
// into a verified b-coloring certificate of order exactly q.
WitnessCertificate gridtiling_certificate(
    const GridTilingInstance& inst, const BcoreReduction& red,
    const std::vector<std::vector<std::pair<int, int>>>& solution);

// JSON parsing for the instance schemas.
MisInstance mis_from_json(const nlohmann::json& j);
McsiInstance mcsi_from_json(const nlohmann::json& j);
GridTilingInstance gridtiling_from_json(const nlohmann::json& j);

}  // namespace gcol
