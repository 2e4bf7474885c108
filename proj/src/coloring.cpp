#include "gcol/coloring.hpp"

#include <algorithm>

#include "gcol/graph_ops.hpp"

namespace gcol {

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Grundy: return "grundy";
    case WitnessKind::PartialGrundy: return "partial_grundy";
    case WitnessKind::BColoring: return "b_coloring";
  }
  return "?";
}

Coloring first_fit(const Graph& g, const std::vector<int>& ordering) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : ordering) {
    g.check_vertex(v);
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("duplicate vertex in ordering");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  Coloring c;
  c.colors.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : ordering) {
    std::uint64_t used = 0;  // bit i set = color i+1 used by a neighbor
    for (int w : g.neighbors(v)) {
      int cw = c.colors[static_cast<std::size_t>(w)];
      if (cw > 0 && cw <= 64) used |= std::uint64_t{1} << (cw - 1);
    }
    int color = 1;
    while (used & (std::uint64_t{1} << (color - 1))) ++color;
    c.colors[static_cast<std::size_t>(v)] = color;
    c.order = std::max(c.order, color);
  }
  return c;
}

namespace {

// Shared structural checks: classes are disjoint nonempty vertex sets whose
// union is the support, and form a proper coloring of g[support].
VerifyResult check_classes(const Graph& g, const WitnessCertificate& cert) {
  VertexSet seen;
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    const VertexSet& cls = cert.classes[i];
    if (cls.empty()) return {false, "class " + std::to_string(i + 1) + " is empty"};
    validate_vertex_set(g, cls);
    if (!is_independent_set(g, cls))
      return {false, "class " + std::to_string(i + 1) + " is not independent"};
    for (int v : cls) seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    return {false, "classes overlap"};
  if (seen != cert.support) return {false, "classes do not partition the support"};
  return {true, ""};
}

}  // namespace

VerifyResult verify_grundy(const Graph& g, const WitnessCertificate& cert) {
  if (cert.kind != WitnessKind::Grundy) return {false, "certificate kind is not grundy"};
  if (auto r = check_classes(g, cert); !r) return r;
  for (std::size_t i = 1; i < cert.classes.size(); ++i) {
    for (int v : cert.classes[i]) {
      for (std::size_t j = 0; j < i; ++j) {
        bool supported = false;
        for (int u : cert.classes[j])
          if (g.has_edge(v, u)) { supported = true; break; }
        if (!supported)
          return {false, "vertex " + std::to_string(v) + " in class " +
                             std::to_string(i + 1) + " has no neighbor in class " +
                             std::to_string(j + 1)};
      }
    }
  }
  return {true, ""};
}

namespace {

VerifyResult check_centers(const Graph& g, const WitnessCertificate& cert) {
  if (!cert.centers) return {false, "centers missing"};
  if (cert.centers->size() != cert.classes.size())
    return {false, "center count differs from class count"};
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    int c = (*cert.centers)[i];
    g.check_vertex(c);
    if (!std::binary_search(cert.classes[i].begin(), cert.classes[i].end(), c))
      return {false, "center of class " + std::to_string(i + 1) + " not in its class"};
  }
  return {true, ""};
}

bool sees_class(const Graph& g, int v, const VertexSet& cls) {
  for (int u : cls)
    if (g.has_edge(v, u)) return true;
  return false;
}

}  // namespace

VerifyResult verify_partial_grundy(const Graph& g, const WitnessCertificate& cert) {
  if (cert.kind != WitnessKind::PartialGrundy)
    return {false, "certificate kind is not partial_grundy"};
  if (auto r = check_classes(g, cert); !r) return r;
  if (auto r = check_centers(g, cert); !r) return r;
  for (std::size_t i = 1; i < cert.classes.size(); ++i) {
    int v = (*cert.centers)[i];
    for (std::size_t j = 0; j < i; ++j)
      if (!sees_class(g, v, cert.classes[j]))
        return {false, "center " + std::to_string(v) + " of class " +
                           std::to_string(i + 1) + " misses class " + std::to_string(j + 1)};
  }
  return {true, ""};
}

VerifyResult verify_b_coloring(const Graph& g, const WitnessCertificate& cert) {
  if (cert.kind != WitnessKind::BColoring)
    return {false, "certificate kind is not b_coloring"};
  if (auto r = check_classes(g, cert); !r) return r;
  if (auto r = check_centers(g, cert); !r) return r;
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    int v = (*cert.centers)[i];
    for (std::size_t j = 0; j < cert.classes.size(); ++j) {
      if (j == i) continue;
      if (!sees_class(g, v, cert.classes[j]))
        return {false, "center " + std::to_string(v) + " of class " +
                           std::to_string(i + 1) + " misses class " + std::to_string(j + 1)};
    }
  }
  return {true, ""};
}

VerifyResult verify_certificate(const Graph& g, const WitnessCertificate& cert) {
  switch (cert.kind) {
    case WitnessKind::Grundy: return verify_grundy(g, cert);
    case WitnessKind::PartialGrundy: return verify_partial_grundy(g, cert);
    case WitnessKind::BColoring: return verify_b_coloring(g, cert);
  }
  return {false, "unknown kind"};
}

WitnessCertificate certificate_from_classes(WitnessKind kind,
                                            std::vector<VertexSet> classes,
                                            std::optional<std::vector<int>> centers) {
  WitnessCertificate cert;
  cert.kind = kind;
  for (auto& c : classes) std::sort(c.begin(), c.end());
  cert.classes = std::move(classes);
  for (const auto& c : cert.classes)
    cert.support.insert(cert.support.end(), c.begin(), c.end());
  std::sort(cert.support.begin(), cert.support.end());
  cert.centers = std::move(centers);
  return cert;
}

Coloring coloring_from_certificate(const Graph& g, const WitnessCertificate& cert) {
  Coloring c;
  c.colors.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < cert.classes.size(); ++i)
    for (int v : cert.classes[i]) c.colors[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
  c.order = cert.order();
  return c;
}

WitnessCertificate extend_partial_grundy(const Graph& g, const WitnessCertificate& cert) {
  if (auto r = verify_partial_grundy(g, cert); !r)
    throw std::invalid_argument("certificate does not verify: " + r.reason);
  Coloring col = coloring_from_certificate(g, cert);
  int max_color = cert.order();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (col.colors[static_cast<std::size_t>(v)] != 0) continue;
    std::uint64_t present = 0;
    for (int w : g.neighbors(v)) {
      int cw = col.colors[static_cast<std::size_t>(w)];
      if (cw > 0 && cw <= 64) present |= std::uint64_t{1} << (cw - 1);
    }
    int c = 0;
    while (present & (std::uint64_t{1} << c)) ++c;  // colors 1..c present
    col.colors[static_cast<std::size_t>(v)] = c + 1;
    max_color = std::max(max_color, c + 1);
  }
  std::vector<VertexSet> classes(static_cast<std::size_t>(max_color));
  for (int v = 0; v < g.vertex_count(); ++v)
    classes[static_cast<std::size_t>(col.colors[static_cast<std::size_t>(v)] - 1)].push_back(v);
  // Original centers keep working; classes beyond the original order were
  // created by a vertex seeing the full prefix below it, so it is a center.
  std::vector<int> centers(*cert.centers);
  for (int c = cert.order() + 1; c <= max_color; ++c) {
    int center = -1;
    for (int v : classes[static_cast<std::size_t>(c - 1)]) {
      std::uint64_t present = 0;
      for (int w : g.neighbors(v)) {
        int cw = col.colors[static_cast<std::size_t>(w)];
        if (cw > 0 && cw < c) present |= std::uint64_t{1} << (cw - 1);
      }
      bool all = true;
      for (int j = 1; j < c; ++j)
        if (!(present & (std::uint64_t{1} << (j - 1)))) { all = false; break; }
      if (all) { center = v; break; }
    }
    if (center < 0) throw std::logic_error("extension produced an uncentered class");
    centers.push_back(center);
  }
  auto out = certificate_from_classes(WitnessKind::PartialGrundy, std::move(classes),
                                      std::move(centers));
  if (auto r = verify_partial_grundy(g, out); !r)
    throw std::logic_error("extended certificate failed verification: " + r.reason);
  return out;
}

}  // namespace gcol
