#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

struct PropCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct PropsReport {
  std::vector<PropCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

Graph random_graph(int n, double p, std::mt19937_64& rng);

// Random instance tweaks used by the equivalence sweeps.
Graph with_planted_false_twin(const Graph& g, int of_vertex);
Graph trimmed_to_degree_budget(Graph g, int d, int s, std::mt19937_64& rng);
Graph repaired_ktt_free(Graph g, int t);

// The named checks. Default parameters are the pinned full-strength values;
// the `scale` on the heavier ones lets the CLI run a quick pass.
PropCheck prop_binomial_trees();
PropCheck prop_half_graph_bounds();
PropCheck prop_sampled_path_bounds(int samples = 100000, int t_max = 30,
                                   std::uint64_t seed = 0x5eed0003);
PropCheck prop_anti_matching_bound();
PropCheck prop_oracle_agreement(int count = 1000, std::uint64_t seed = 0x5eed0005);
PropCheck prop_twin_invariance(int count = 500, std::uint64_t seed = 0x5eed0006);
PropCheck prop_gridtiling_forward(int count = 50, std::uint64_t seed = 0x5eed0007);
PropCheck prop_rooted_reduction_equivalence();
PropCheck prop_fpt_bounded_degree_equivalence(int count = 500,
                                              std::uint64_t seed = 0x5eed0009);
PropCheck prop_fpt_ktt_free_equivalence(int count = 500, std::uint64_t seed = 0x5eed000a);
PropCheck prop_separating_contract();
PropCheck prop_star_soundness(std::uint64_t seed = 0x5eed000c);
PropCheck prop_threshold_arithmetic();

// All checks, optionally with reduced workloads for interactive runs.
PropsReport run_props(bool quick, std::uint64_t seed);
PropsReport run_suite(const std::string& name, bool quick, std::uint64_t seed);

}  // namespace gcol
