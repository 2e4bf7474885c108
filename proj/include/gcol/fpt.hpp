#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcol/coloring.hpp"
#include "gcol/exact.hpp"
#include "gcol/graph.hpp"
#include "gcol/graph_ops.hpp"

namespace gcol {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Separating families
// ---------------------------------------------------------------------------

struct SeparatingFamily {
  int universe_size = 0;
  int a = 0, b = 0;
  std::vector<VertexSet> sets;
};

// A family such that for all disjoint A, B over [n] with |A| <= a, |B| <= b
// some member contains A and avoids B. For n <= 16 the power set is used.
// Beyond that, a product of multiplicative hash functions with all bucket
// bicolorings: with m = 2ab+1 buckets, for any (A,B) fewer than p multipliers
// produce an A-B bucket collision, so some multiplier separates them.
SeparatingFamily separating_family(int n, int a, int b);

// Exhaustive check of the separating property; cost grows like n^(a+b).
bool verify_separating_family(const SeparatingFamily& f);

// ---------------------------------------------------------------------------
// Thresholds
// ---------------------------------------------------------------------------

enum class FptMode { Faithful, Practical };

// A possibly astronomically large bound. When the exact value cannot be
// materialized (the tower M for k >= 3), `saturated` marks it as at least
// 2^64; desk-scale quantities never reach that floor, so gating comparisons
// stay sound.
struct BigBound {
  BigInt value;
  bool saturated = false;
};

inline bool at_least(const BigInt& x, const BigBound& bound) {
  return !bound.saturated && x >= bound.value;
}

struct Thresholds {
  FptMode mode = FptMode::Faithful;
  int t = 0, k = 0;
  BigBound f_tk;      // 2^(2t + k(t k^t + t))
  BigBound g_tk;      // 2^(k(t k^t + t)) * M'
  BigBound M;         // tower of 8s of height k topped by t
  BigBound M_prime;   // max(M, N(t,1/k))
  BigInt n_t_eps;     // configured, no formula in this construction
};

// Faithful mode evaluates the formulas with arbitrary precision and requires
// n_t_eps explicitly. Practical mode takes caller overrides for desk-scale
// runs (soundness comes from structural verification of every output).
Thresholds thresholds(int t, int k, FptMode mode, std::optional<BigInt> n_t_eps = {});
Thresholds practical_thresholds(int t, int k, BigInt f, BigInt g, BigInt m_prime,
                                BigInt n_t_eps);

// ---------------------------------------------------------------------------
// Witness structures
// ---------------------------------------------------------------------------

struct StarOrCliqueWitness {
  bool is_clique = false;
  VertexSet clique;                 // size k when is_clique
  VertexSet centers;                // size k otherwise
  std::vector<VertexSet> leaf_sets; // k sets of k leaves, aligned with centers
};

// Structural verification of an induced kK_{1,k} (or a k-clique).
VerifyResult verify_star_or_clique(const Graph& g, const StarOrCliqueWitness& w, int k);

// Builds the b-coloring / partial-Grundy certificate the witness implies.
WitnessCertificate certificate_from_stars(const Graph& g, const StarOrCliqueWitness& w,
                                          WitnessKind kind);

// ---------------------------------------------------------------------------
// Algorithms
// ---------------------------------------------------------------------------

enum class CoreProblem { PartialGrundy, BCore };

// Decision for graphs where at most s vertices have degree > d: guess the
// high-degree part I of a witness, walk a separating family to carve out the
// low-degree components, classify them up to label-preserving isomorphism,
// and assemble candidate witnesses from class representatives.
std::optional<WitnessCertificate> solve_almost_bounded_degree(
    const Graph& g, int k, int d, int s, CoreProblem problem);

struct ExtractResult {
  std::optional<std::pair<VertexSet, VertexSet>> sets;  // (A', B')
  std::string failure;  // set when best-effort extraction starved
};

// Halving sequence over the first N+t vertices of B: each step keeps the
// larger of neighbor/non-neighbor side of A. Vertices of B that kept their
// neighbor side are complete with the final core; more than t-1 of them is a
// K_{t,t} and reported as a contract breach.
ExtractResult anti_biclique_extract(const Graph& g, const VertexSet& A,
                                    const VertexSet& B, int N, int t,
                                    FptMode mode = FptMode::Practical);

struct MultipartiteOutcome {
  std::optional<VertexSet> clique;          // k-clique when found
  std::vector<VertexSet> part_independent;  // else one k-IS per part
  std::string failure;
};

// Pairwise anti-biclique extraction makes the parts anti-complete, then a
// Ramsey pass per part finds a k-clique or a k-independent set.
MultipartiteOutcome clique_or_multipartite_is(const Graph& g,
                                              const std::vector<VertexSet>& parts,
                                              int k, int t,
                                              FptMode mode = FptMode::Practical);

struct StarExtractResult {
  std::optional<StarOrCliqueWitness> witness;
  std::string failure;  // names the starving inductive step when best-effort fails
};

// The inductive private-neighbor extraction: Ramsey an independent set in X,
// repeatedly pick the X-vertex with the smallest Y-neighborhood, take the
// exact-neighborhood class through it as private leaf material, discard the
// vertices sharing a k-th of its neighborhood, and finish with
// clique_or_multipartite_is.
StarExtractResult star_forest_extract(const Graph& g, VertexSet X, VertexSet Y, int k,
                                      int t, const Thresholds& th);

struct KttFreeResult {
  bool yes = false;
  std::optional<WitnessCertificate> certificate;
  std::string branch;  // audit: "star-extraction" or "bounded-degree"
  Thresholds used;
};

// The K_{t,t}-free decision procedure: vertices of degree >= g+f form X;
// |X| >= f forces a star-forest witness, otherwise the almost-bounded-degree
// routine runs with d = g+f-1, s = |X|.
KttFreeResult solve_ktt_free(const Graph& g, int k, int t, CoreProblem problem,
                             const Thresholds& th,
                             bool check_ktt_free = true,
                             std::uint64_t biclique_budget = 2'000'000);

}  // namespace gcol
