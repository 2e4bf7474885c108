#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

// Binomial tree T_k on 2^(k-1) vertices. canonical_order[v] = j when v is the
// root of the canonical T_j subtree hanging at v (the root has order k); in
// the greedy coloring reaching the root, vertex v gets color canonical_order[v].
struct BinomialTree {
  Graph graph;
  int root = 0;
  std::vector<int> parent;           // -1 at the root
  std::vector<int> canonical_order;  // 1-based
};

BinomialTree binomial_tree(int k);

// T'_k of the subtree-removal construction: for each chosen x (a root of a
// canonical T_i whose parent is a root of T_(i+1)), the subtree of x's
// T_(i-1) child is removed. X-members then need an external color-(i-1)
// provider to play their role.
struct PrunedBinomialTree {
  Graph graph;
  int root = 0;
  int i = 0;
  VertexSet x_members;
  int eligible_count = 0;  // number of eligible roots before choosing x_count
};

PrunedBinomialTree pruned_binomial_tree(int k, int i, int x_count);

// Canonical half-graph H_{t,t}: a_i ~ b_j iff i < j. Levels are 1-based.
struct HalfGraph {
  Graph graph;
  VertexSet side_a;
  VertexSet side_b;
  std::vector<int> level;  // per vertex
};

HalfGraph half_graph(int t);

// Length-l path (or closed cycle) of half-graphs with l+1 layers of t
// vertices each and one consistent orientation throughout: level p in layer
// i is adjacent to level q in layer i+1 iff p < q; a cycle adds the same
// rule between the last layer and layer 1.
struct HalfGraphPath {
  Graph graph;
  std::vector<VertexSet> layers;
  std::vector<int> level;
  bool closed = false;
};

HalfGraphPath half_graph_path(int l, int t);
HalfGraphPath half_graph_cycle(int l, int t);

// Complement of a perfect matching on 2t vertices (anti-matching of height t).
Graph anti_matching(int t);

struct StarForest {
  Graph graph;
  VertexSet centers;
};

// Disjoint union of `count` stars K_{1,leaves}.
StarForest star_forest(int count, int leaves);

// T_5 with the pendant (color-1) neighbors of beta and gamma removed; the two
// vertices that get color 2 under parents colored 3. Fourteen vertices; beta
// and gamma have degree 1 inside the tree and need external color-1 providers
// for the root to reach color 5.
struct T5EdgeTree {
  Graph graph;
  int root = 0;
  int beta = 0;
  int gamma = 0;
  std::vector<int> canonical_order;  // color each vertex takes in the optimum coloring
};

T5EdgeTree t5_edge_tree();

enum class GadgetFamily {
  BinomialTree,
  PrunedBinomialTree,
  HalfGraph,
  HalfGraphPath,
  HalfGraphCycle,
  AntiMatching,
  StarForest,
  T5EdgeTree,
};

struct GadgetSpec {
  GadgetFamily family;
  std::map<std::string, int> parameters;
};

GadgetFamily gadget_family_from_name(const std::string& name);
const char* gadget_family_name(GadgetFamily f);

// Builds any family from a parameter map (CLI entry point). Parameter names:
// k, t, l, i, x, count, leaves as applicable.
Graph build_gadget(const GadgetSpec& spec);

}  // namespace gcol
