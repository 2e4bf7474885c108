#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_of_new;  // new id -> old id
  std::vector<int> new_of_old;  // old id -> new id, -1 when absent
};

// g[s] with dense renumbering; role labels carry over.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

struct TwinClasses {
  std::vector<VertexSet> classes;   // partition of V by open neighborhood
  VertexSet representatives;        // smallest id per class
  Graph reduced;                    // induced on representatives
  std::vector<int> reduced_of_old;  // old id -> representative's reduced id
};

// Groups vertices with identical open neighborhoods (false twins).
TwinClasses false_twin_classes(const Graph& g);

struct BicliqueWitness {
  VertexSet side_a;
  VertexSet side_b;
};

// Does g contain K_{t,t} as a (not necessarily induced) subgraph?
// Enumerates t-subsets of candidate vertices and checks their common
// neighborhood; refuses when the subset count exceeds `budget`.
std::optional<BicliqueWitness> has_biclique(const Graph& g, int t,
                                            std::uint64_t budget = 20'000'000);

// A connected graph of bounded size whose vertices carry label sets drawn
// from an external anchor set (stored by anchor vertex id, sorted).
struct LabeledComponent {
  Graph graph;
  std::vector<VertexSet> labels;  // per vertex
};

// Label-preserving graph isomorphism, backtracking with degree+label pruning.
// A cheap invariant signature is used as a pre-filter only.
bool labeled_isomorphic(const LabeledComponent& c1, const LabeledComponent& c2,
                        int size_cap = 64);

struct RamseyResult {
  bool is_clique;
  VertexSet members;  // size s, verified
};

// Greedy pivot procedure: repeatedly pick the smallest-id vertex and keep the
// larger of its neighbor / non-neighbor side. Pivots that kept the neighbor
// side form a clique, the others an independent set; n >= 2^(2s-2) guarantees
// one of them reaches size s. With require_guarantee=false the procedure runs
// best-effort and returns nullopt on failure.
std::optional<RamseyResult> ramsey_clique_or_independent(
    const Graph& g, int s, bool require_guarantee = false);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

// Connected components of g[subset], each sorted; components ordered by
// smallest member.
std::vector<VertexSet> components_of_subset(const Graph& g, const VertexSet& subset);

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return components_of_subset(g, full_vertex_set(g));
}

}  // namespace gcol
