#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

// Per-vertex colors, 0 = uncolored. `order` is the number of distinct colors
// in use. Properness is a property checked by operations, not an invariant of
// the type.
struct Coloring {
  std::vector<int> colors;
  int order = 0;
};

enum class WitnessKind { Grundy, PartialGrundy, BColoring };

const char* witness_kind_name(WitnessKind k);

// A color-class witness on an explicit support set. Classes partition the
// support; class i (1-based) holds the vertices colored i. Centers are the
// per-class supported vertices, required for PartialGrundy and BColoring.
struct WitnessCertificate {
  WitnessKind kind = WitnessKind::Grundy;
  VertexSet support;
  std::vector<VertexSet> classes;
  std::optional<std::vector<int>> centers;

  int order() const { return static_cast<int>(classes.size()); }
};

struct GreedyTrace {
  std::vector<int> ordering;
  Coloring resulting;
};

// Each vertex of `ordering`, in order, receives the smallest positive color
// absent among its already-colored neighbors. Vertices not in the ordering
// stay uncolored (0).
Coloring first_fit(const Graph& g, const std::vector<int>& ordering);

// Boolean is the contract; the reason strings the first violated constraint.
struct VerifyResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

VerifyResult verify_grundy(const Graph& g, const WitnessCertificate& cert);
VerifyResult verify_partial_grundy(const Graph& g, const WitnessCertificate& cert);
VerifyResult verify_b_coloring(const Graph& g, const WitnessCertificate& cert);
VerifyResult verify_certificate(const Graph& g, const WitnessCertificate& cert);

// Extends a verified partial-Grundy certificate on S to all of V: each
// vertex outside S receives c+1 where c is the highest color with 1..c all
// present among its currently colored neighbors. Never decreases the order.
WitnessCertificate extend_partial_grundy(const Graph& g, const WitnessCertificate& cert);

// Helpers shared by solvers and tests.
WitnessCertificate certificate_from_classes(WitnessKind kind,
                                            std::vector<VertexSet> classes,
                                            std::optional<std::vector<int>> centers);
Coloring coloring_from_certificate(const Graph& g, const WitnessCertificate& cert);

}  // namespace gcol
