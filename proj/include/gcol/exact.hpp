#pragma once

#include <cstdint>
#include <optional>

#include "gcol/coloring.hpp"
#include "gcol/graph.hpp"

namespace gcol {

struct SolveResult {
  int value = 0;
  WitnessCertificate certificate;  // verifies with the matching verifier, order == value
};

struct ExactCaps {
  int grundy = 20;      // subset memo over 2^n
  int rooted = 16;      // bottom-up over all subsets containing the root
  int orderings = 9;    // n! enumeration
  int partial = 12;     // set-partition enumeration
  int bcore = 10;       // center-directed full search
  int witness_budget = 16;  // max connected-subgraph size in witness search
};

// Gamma(G) by memoized recursion over vertex subsets: each color class of a
// greedy coloring is a maximal independent set of the residual graph, so
// Gamma(S) = 1 + max over maximal IS M of g[S] of Gamma(S \ M). Ties broken
// toward the lexicographically smallest class, making the result unique.
// The classical equivalence with the ordering definition is cross-validated
// in-repo against grundy_number_by_orderings rather than assumed.
SolveResult grundy_number(const Graph& g, int cap = ExactCaps{}.grundy);

// Independent oracle: max color of first_fit over all n! orderings.
int grundy_number_by_orderings(const Graph& g, int cap = ExactCaps{}.orderings);

// Max k such that first-fit on some ordering of some vertex subset containing
// v gives v color k. Subset recursion tracking the round in which v's class
// is removed, maximized over all initial subsets containing v.
int rooted_grundy(const Graph& g, int v, int cap = ExactCaps{}.rooted);

// Max color over `samples` uniformly random orderings of the full vertex set;
// a seeded lower-bound sampler, not an exact solver.
int sampled_grundy_lower_bound(const Graph& g, int samples, std::uint64_t seed);

// Enumerates connected induced subgraphs of size at most 2^(k-1) and tests
// each with grundy_number; returns a certificate of order >= k or nullopt.
std::optional<WitnessCertificate> grundy_witness_search(
    const Graph& g, int k, int size_budget = ExactCaps{}.witness_budget);

// Gamma'(G). Primary algorithm: restricted-growth-string enumeration of
// proper partitions of V plus a chain DP selecting orderable classes; a
// center-directed search must agree and any mismatch throws.
SolveResult partial_grundy_number(const Graph& g, int cap = ExactCaps{}.partial);

// Center-directed decision: is there a partial-Grundy witness of order k?
// Complete search over centers and their supports (witness size <= k^2).
std::optional<WitnessCertificate> partial_grundy_at_least(const Graph& g, int k);

// Gamma_b(G): largest k such that some induced subgraph admits a b-coloring
// of order k. Center-directed search; cross-checked against the subset plus
// partition enumeration oracle when n <= 8.
SolveResult b_chromatic_core_order(const Graph& g, int cap = ExactCaps{}.bcore);

std::optional<WitnessCertificate> bcore_at_least(const Graph& g, int k);

// Enumeration oracle for Gamma_b: all vertex subsets, all proper partitions.
int bcore_order_by_enumeration(const Graph& g, int cap = 8);

// Enumeration oracle for Gamma' used by tests: the partition-enumeration
// value alone, without the center-directed agreement check.
int partial_grundy_by_partitions(const Graph& g, int cap = ExactCaps{}.partial);

}  // namespace gcol
