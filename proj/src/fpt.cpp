#include "gcol/fpt.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <unordered_map>

namespace gcol {

// ---------------------------------------------------------------------------
// Separating families
// ---------------------------------------------------------------------------

namespace {

int next_prime_above(int n) {
  int p = n + 1;
  auto is_prime = [](int x) {
    if (x < 2) return false;
    for (int d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  while (!is_prime(p)) ++p;
  return p;
}

}  // namespace

SeparatingFamily separating_family(int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0) throw std::invalid_argument("n, a, b must be non-negative");
  SeparatingFamily f;
  f.universe_size = n;
  f.a = a;
  f.b = b;
  if (n <= 16) {
    // Power set: exact and small enough at this size.
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
      VertexSet set;
      for (int v = 0; v < n; ++v)
        if (s & (std::uint32_t{1} << v)) set.push_back(v);
      f.sets.push_back(std::move(set));
    }
    return f;
  }
  if (a == 0 || b == 0) {
    f.sets.push_back({});
    f.sets.push_back(full_vertex_set(Graph(n)));
    return f;
  }
  // Multiplicative hashes into m = 2ab+1 buckets: for any disjoint (A,B),
  // each cross pair collides for fewer than p/(ab) multipliers, so some
  // multiplier keeps all A-buckets clear of all B-buckets.
  const long long m = 2LL * a * b + 1;
  const int p = next_prime_above(n);
  const long long set_count = static_cast<long long>(p - 1) * (1LL << m);
  if (m > 24 || set_count > 8'000'000)
    throw CapExceeded("separating family too large to materialize for n=" +
                      std::to_string(n) + ", a=" + std::to_string(a) +
                      ", b=" + std::to_string(b));
  std::vector<int> bucket(static_cast<std::size_t>(n));
  for (int c = 1; c < p; ++c) {
    for (int v = 0; v < n; ++v)
      bucket[static_cast<std::size_t>(v)] =
          static_cast<int>((static_cast<long long>(c) * v) % p % m);
    for (std::uint32_t colors = 0; colors < (std::uint32_t{1} << m); ++colors) {
      VertexSet set;
      for (int v = 0; v < n; ++v)
        if (colors & (std::uint32_t{1} << bucket[static_cast<std::size_t>(v)]))
          set.push_back(v);
      f.sets.push_back(std::move(set));
    }
  }
  std::sort(f.sets.begin(), f.sets.end());
  f.sets.erase(std::unique(f.sets.begin(), f.sets.end()), f.sets.end());
  return f;
}

bool verify_separating_family(const SeparatingFamily& f) {
  const int n = f.universe_size;
  if (n > 64) throw CapExceeded("exhaustive verification needs n <= 64");
  std::vector<std::uint64_t> masks;
  masks.reserve(f.sets.size());
  for (const auto& s : f.sets) {
    std::uint64_t m = 0;
    for (int v : s) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  // Enumerate all (A, B) with |A| <= a, |B| <= b, disjoint.
  std::vector<std::uint64_t> as;
  std::function<void(int, int, std::uint64_t)> build_a = [&](int start, int left,
                                                             std::uint64_t cur) {
    as.push_back(cur);
    if (left == 0) return;
    for (int v = start; v < n; ++v) build_a(v + 1, left - 1, cur | (std::uint64_t{1} << v));
  };
  build_a(0, f.a, 0);
  for (std::uint64_t amask : as) {
    std::vector<std::uint64_t> bs;
    std::function<void(int, int, std::uint64_t)> build_b = [&](int start, int left,
                                                               std::uint64_t cur) {
      bs.push_back(cur);
      if (left == 0) return;
      for (int v = start; v < n; ++v) {
        if (amask & (std::uint64_t{1} << v)) continue;
        build_b(v + 1, left - 1, cur | (std::uint64_t{1} << v));
      }
    };
    build_b(0, f.b, 0);
    for (std::uint64_t bmask : bs) {
      bool separated = false;
      for (std::uint64_t s : masks) {
        if ((amask & ~s) == 0 && (bmask & s) == 0) { separated = true; break; }
      }
      if (!separated) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Thresholds
// ---------------------------------------------------------------------------

namespace {

constexpr long long kMaxExponentBits = 1 << 22;  // materialization guard

BigBound pow2_bound(const BigInt& exponent) {
  if (exponent > kMaxExponentBits) return {BigInt(1) << 64, true};
  return {BigInt(1) << exponent.convert_to<unsigned>(), false};
}

BigBound mul_bound(const BigBound& x, const BigBound& y) {
  if (x.saturated || y.saturated) return {BigInt(1) << 64, true};
  return {x.value * y.value, false};
}

BigBound max_bound(const BigBound& x, const BigInt& y) {
  if (x.saturated) return x;
  return {x.value > y ? x.value : y, false};
}

}  // namespace

Thresholds thresholds(int t, int k, FptMode mode, std::optional<BigInt> n_t_eps) {
  if (t < 1 || k < 1) throw std::invalid_argument("t and k must be positive");
  if (mode == FptMode::Faithful && !n_t_eps)
    throw std::invalid_argument(
        "faithful mode requires an explicit N(t,1/k); no formula exists for it here");
  Thresholds th;
  th.mode = mode;
  th.t = t;
  th.k = k;
  th.n_t_eps = n_t_eps.value_or(BigInt(1));
  BigInt kt = 1;  // k^t
  for (int i = 0; i < t; ++i) kt *= k;
  BigInt e = BigInt(k) * (BigInt(t) * kt + t);  // k(t k^t + t)
  th.f_tk = pow2_bound(e + 2 * t);
  // Tower of 8s, height k, topped by t.
  BigBound m{BigInt(t), false};
  for (int i = 0; i < k; ++i) {
    if (m.saturated || m.value * 3 > kMaxExponentBits) {
      m = {BigInt(1) << 64, true};
    } else {
      m = {BigInt(1) << (m.value * 3).convert_to<unsigned>(), false};  // 8^x = 2^(3x)
    }
  }
  th.M = m;
  th.M_prime = max_bound(th.M, th.n_t_eps);
  th.g_tk = mul_bound(pow2_bound(e), th.M_prime);
  return th;
}

Thresholds practical_thresholds(int t, int k, BigInt f, BigInt g, BigInt m_prime,
                                BigInt n_t_eps) {
  Thresholds th;
  th.mode = FptMode::Practical;
  th.t = t;
  th.k = k;
  th.f_tk = {std::move(f), false};
  th.g_tk = {std::move(g), false};
  th.M = {m_prime, false};
  th.M_prime = {std::move(m_prime), false};
  th.n_t_eps = std::move(n_t_eps);
  return th;
}

// ---------------------------------------------------------------------------
// Witness structures
// ---------------------------------------------------------------------------

VerifyResult verify_star_or_clique(const Graph& g, const StarOrCliqueWitness& w, int k) {
  if (w.is_clique) {
    if (static_cast<int>(w.clique.size()) != k) return {false, "clique size is not k"};
    validate_vertex_set(g, w.clique);
    if (!is_clique(g, w.clique)) return {false, "clique side has a missing edge"};
    return {true, ""};
  }
  if (static_cast<int>(w.centers.size()) != k) return {false, "need k centers"};
  if (w.leaf_sets.size() != w.centers.size()) return {false, "need k leaf sets"};
  validate_vertex_set(g, w.centers);
  VertexSet all_leaves;
  for (std::size_t i = 0; i < w.leaf_sets.size(); ++i) {
    if (static_cast<int>(w.leaf_sets[i].size()) != k)
      return {false, "star " + std::to_string(i + 1) + " does not have k leaves"};
    validate_vertex_set(g, w.leaf_sets[i]);
    for (int leaf : w.leaf_sets[i]) all_leaves.push_back(leaf);
  }
  std::sort(all_leaves.begin(), all_leaves.end());
  if (std::adjacent_find(all_leaves.begin(), all_leaves.end()) != all_leaves.end())
    return {false, "leaf sets overlap"};
  for (int c : w.centers)
    if (std::binary_search(all_leaves.begin(), all_leaves.end(), c))
      return {false, "a center is also a leaf"};
  if (!is_independent_set(g, w.centers)) return {false, "centers are adjacent"};
  if (!is_independent_set(g, all_leaves)) return {false, "two leaves are adjacent"};
  for (std::size_t i = 0; i < w.centers.size(); ++i) {
    for (std::size_t j = 0; j < w.leaf_sets.size(); ++j) {
      for (int leaf : w.leaf_sets[j]) {
        bool adjacent = g.has_edge(w.centers[i], leaf);
        if (i == j && !adjacent)
          return {false, "leaf " + std::to_string(leaf) + " misses its center"};
        if (i != j && adjacent)
          return {false, "leaf " + std::to_string(leaf) + " touches a foreign center"};
      }
    }
  }
  return {true, ""};
}

WitnessCertificate certificate_from_stars(const Graph& g, const StarOrCliqueWitness& w,
                                          WitnessKind kind) {
  const int k = static_cast<int>(w.is_clique ? w.clique.size() : w.centers.size());
  std::vector<VertexSet> classes(static_cast<std::size_t>(k));
  std::vector<int> centers(static_cast<std::size_t>(k), -1);
  if (w.is_clique) {
    for (int i = 0; i < k; ++i) {
      classes[static_cast<std::size_t>(i)].push_back(w.clique[static_cast<std::size_t>(i)]);
      centers[static_cast<std::size_t>(i)] = w.clique[static_cast<std::size_t>(i)];
    }
  } else {
    for (int i = 0; i < k; ++i) {
      classes[static_cast<std::size_t>(i)].push_back(w.centers[static_cast<std::size_t>(i)]);
      centers[static_cast<std::size_t>(i)] = w.centers[static_cast<std::size_t>(i)];
    }
    // Leaves of the star centered with color i take the colors [k] \ {i}.
    for (int i = 0; i < k; ++i) {
      int slot = 0;
      for (int leaf : w.leaf_sets[static_cast<std::size_t>(i)]) {
        int color = (slot % (k - 1)) + 1;       // 1..k-1
        if (color >= i + 1) ++color;            // skip own color
        classes[static_cast<std::size_t>(color - 1)].push_back(leaf);
        ++slot;
      }
    }
  }
  auto cert = certificate_from_classes(kind, std::move(classes), std::move(centers));
  if (auto r = verify_certificate(g, cert); !r)
    throw std::logic_error("star witness certificate failed: " + r.reason);
  return cert;
}

// ---------------------------------------------------------------------------
// Almost-bounded-degree solver
// ---------------------------------------------------------------------------

namespace {

WitnessCertificate remap_certificate(const WitnessCertificate& cert,
                                     const std::vector<int>& old_of_new) {
  std::vector<VertexSet> classes;
  for (const auto& cls : cert.classes) {
    VertexSet mapped;
    for (int v : cls) mapped.push_back(old_of_new[static_cast<std::size_t>(v)]);
    classes.push_back(sorted_unique(std::move(mapped)));
  }
  std::optional<std::vector<int>> centers;
  if (cert.centers) {
    centers.emplace();
    for (int v : *cert.centers) centers->push_back(old_of_new[static_cast<std::size_t>(v)]);
  }
  return certificate_from_classes(cert.kind, std::move(classes), std::move(centers));
}

std::optional<WitnessCertificate> decide_on_subset(const Graph& g, const VertexSet& support,
                                                   int k, CoreProblem problem) {
  auto ind = induced_subgraph(g, support);
  std::optional<WitnessCertificate> sub =
      problem == CoreProblem::PartialGrundy ? partial_grundy_at_least(ind.graph, k)
                                            : bcore_at_least(ind.graph, k);
  if (!sub) return std::nullopt;
  auto cert = remap_certificate(*sub, ind.old_of_new);
  if (auto r = verify_certificate(g, cert); !r)
    throw std::logic_error("remapped certificate failed: " + r.reason);
  return cert;
}

}  // namespace

std::optional<WitnessCertificate> solve_almost_bounded_degree(const Graph& g, int k, int d,
                                                              int s, CoreProblem problem) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int n = g.vertex_count();
  if (n > 64) throw CapExceeded("solver needs n <= 64");
  VertexSet X;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > d) X.push_back(v);
  if (static_cast<int>(X.size()) > s)
    throw std::invalid_argument("more than s vertices have degree larger than d");
  VertexSet universe;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) <= d) universe.push_back(v);

  const int kk = k * k;
  const int a_cap = std::min<int>(kk, static_cast<int>(universe.size()));
  const long long b_need = static_cast<long long>(d) * kk;
  const int b_cap = static_cast<int>(
      std::min<long long>(b_need, static_cast<long long>(universe.size())));
  SeparatingFamily family =
      separating_family(static_cast<int>(universe.size()), a_cap, b_cap);

  std::unordered_map<std::uint64_t, char> tested;  // support mask -> yes/no
  auto support_mask = [](const VertexSet& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return m;
  };

  const int xsz = static_cast<int>(X.size());
  for (std::uint32_t isel = 0; isel < (std::uint32_t{1} << xsz); ++isel) {
    VertexSet I;
    for (int idx = 0; idx < xsz; ++idx)
      if (isel & (std::uint32_t{1} << idx)) I.push_back(X[static_cast<std::size_t>(idx)]);
    for (const auto& s_universe : family.sets) {
      VertexSet S;
      for (int idx : s_universe) S.push_back(universe[static_cast<std::size_t>(idx)]);
      std::sort(S.begin(), S.end());
      auto comps = components_of_subset(g, S);
      // Keep components of size <= k^2 and classify them by
      // label-preserving isomorphism, labels being N(v) & I.
      std::vector<LabeledComponent> reps;
      std::vector<std::vector<VertexSet>> members;  // per class, the raw components
      auto labeled_of = [&](const VertexSet& comp) {
        auto ind = induced_subgraph(g, comp);
        LabeledComponent lc;
        lc.graph = std::move(ind.graph);
        lc.labels.resize(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
          VertexSet label;
          for (int u : I)
            if (g.has_edge(comp[i], u)) label.push_back(u);
          lc.labels[i] = std::move(label);
        }
        return lc;
      };
      for (const auto& comp : comps) {
        if (static_cast<int>(comp.size()) > kk) continue;
        LabeledComponent lc = labeled_of(comp);
        bool placed = false;
        for (std::size_t c = 0; c < reps.size(); ++c) {
          if (labeled_isomorphic(reps[c], lc)) {
            members[c].push_back(comp);
            placed = true;
            break;
          }
        }
        if (!placed) {
          reps.push_back(std::move(lc));
          members.push_back({comp});
        }
      }
      // Multiplicity vectors: counts per class, total vertex budget k^2.
      std::vector<int> counts(reps.size(), 0);
      std::function<std::optional<WitnessCertificate>(std::size_t, int)> enumerate =
          [&](std::size_t cls, int budget) -> std::optional<WitnessCertificate> {
        if (cls == reps.size()) {
          VertexSet W = I;
          for (std::size_t c = 0; c < members.size(); ++c)
            for (int m = 0; m < counts[c]; ++m)
              W.insert(W.end(), members[c][static_cast<std::size_t>(m)].begin(),
                       members[c][static_cast<std::size_t>(m)].end());
          W = sorted_unique(std::move(W));
          if (W.empty()) return std::nullopt;
          std::uint64_t key = support_mask(W);
          auto it = tested.find(key);
          if (it != tested.end()) {
            if (!it->second) return std::nullopt;
            return decide_on_subset(g, W, k, problem);
          }
          auto cert = decide_on_subset(g, W, k, problem);
          tested[key] = cert.has_value() ? 1 : 0;
          return cert;
        }
        int size = reps[cls].graph.vertex_count();
        int avail = static_cast<int>(members[cls].size());
        int max_take = std::min(avail, size > 0 ? budget / size : 0);
        for (int take = 0; take <= max_take; ++take) {
          counts[cls] = take;
          if (auto cert = enumerate(cls + 1, budget - take * size)) return cert;
        }
        counts[cls] = 0;
        return std::nullopt;
      };
      if (auto cert = enumerate(0, kk)) return cert;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Anti-biclique extraction and friends
// ---------------------------------------------------------------------------

ExtractResult anti_biclique_extract(const Graph& g, const VertexSet& A, const VertexSet& B,
                                    int N, int t, FptMode mode) {
  validate_vertex_set(g, A);
  validate_vertex_set(g, B);
  if (N < 1 || t < 1) throw std::invalid_argument("N and t must be positive");
  for (int v : B)
    if (std::binary_search(A.begin(), A.end(), v))
      throw std::invalid_argument("A and B must be disjoint");
  if (mode == FptMode::Faithful) {
    if (N < t) throw std::invalid_argument("faithful mode needs N >= t");
    BigInt need = BigInt(N) << static_cast<unsigned>(std::min(N + t, 60));
    if (N + t > 60 || BigInt(static_cast<long long>(A.size())) < need)
      throw std::invalid_argument("faithful mode needs |A| >= N*2^(N+t)");
    if (static_cast<int>(B.size()) < N + t)
      throw std::invalid_argument("faithful mode needs |B| >= N+t");
  }

  const int steps = std::min<int>(N + t, static_cast<int>(B.size()));
  VertexSet a_cur = A;
  VertexSet anti_b, complete_b;
  for (int i = 0; i < steps; ++i) {
    int bi = B[static_cast<std::size_t>(i)];
    VertexSet nb, nonnb;
    for (int v : a_cur) (g.has_edge(bi, v) ? nb : nonnb).push_back(v);
    if (nb.size() >= nonnb.size()) {
      a_cur = std::move(nb);
      complete_b.push_back(bi);
    } else {
      a_cur = std::move(nonnb);
      anti_b.push_back(bi);
    }
  }
  if (static_cast<int>(complete_b.size()) >= t) {
    if (static_cast<int>(a_cur.size()) >= t) {
      VertexSet side_a(a_cur.begin(), a_cur.begin() + t);
      VertexSet side_b(complete_b.begin(), complete_b.begin() + t);
      throw ContractBreach("input is not K_{t,t}-free: sides {" + std::to_string(side_a[0]) +
                           ",...} x {" + std::to_string(side_b[0]) + ",...} form a biclique");
    }
    return {std::nullopt, "too many complete-side vertices and the core is too small"};
  }
  if (static_cast<int>(a_cur.size()) < N)
    return {std::nullopt, "halving exhausted A before reaching size N"};
  if (static_cast<int>(anti_b.size()) < N)
    return {std::nullopt, "fewer than N anti-complete vertices in B"};
  VertexSet a_prime(a_cur.begin(), a_cur.begin() + N);
  VertexSet b_prime(anti_b.begin(), anti_b.begin() + N);
  std::sort(b_prime.begin(), b_prime.end());
  for (int x : a_prime)
    for (int y : b_prime)
      if (g.has_edge(x, y)) throw std::logic_error("extraction left a cross edge");
  return {std::make_pair(std::move(a_prime), std::move(b_prime)), ""};
}

MultipartiteOutcome clique_or_multipartite_is(const Graph& g,
                                              const std::vector<VertexSet>& parts, int k,
                                              int t, FptMode mode) {
  MultipartiteOutcome out;
  std::vector<VertexSet> cur = parts;
  const int n_target = std::max(t, k);
  for (std::size_t i = 0; i < cur.size(); ++i) {
    for (std::size_t j = i + 1; j < cur.size(); ++j) {
      // Skip pairs that are already anti-complete.
      bool anti = true;
      for (int x : cur[i]) {
        for (int y : cur[j])
          if (g.has_edge(x, y)) { anti = false; break; }
        if (!anti) break;
      }
      if (anti) continue;
      auto ext = anti_biclique_extract(g, cur[i], cur[j], n_target, t, mode);
      if (!ext.sets) {
        out.failure = "extraction between parts " + std::to_string(i + 1) + " and " +
                      std::to_string(j + 1) + " failed: " + ext.failure;
        return out;
      }
      cur[i] = ext.sets->first;
      cur[j] = ext.sets->second;
    }
  }
  for (std::size_t i = 0; i < cur.size(); ++i) {
    auto ind = induced_subgraph(g, cur[i]);
    auto res = ramsey_clique_or_independent(ind.graph, k, false);
    if (!res) {
      out.failure = "part " + std::to_string(i + 1) + " yields neither a " +
                    std::to_string(k) + "-clique nor a " + std::to_string(k) + "-IS";
      return out;
    }
    VertexSet mapped;
    for (int v : res->members) mapped.push_back(ind.old_of_new[static_cast<std::size_t>(v)]);
    mapped = sorted_unique(std::move(mapped));
    if (res->is_clique) {
      out.clique = std::move(mapped);
      return out;
    }
    out.part_independent.push_back(std::move(mapped));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Star forest extraction
// ---------------------------------------------------------------------------

namespace {

// Asymmetric greedy Ramsey: clique of size `ct` or independent set of size
// `it`, whichever the pivots reach first.
struct AsymRamsey {
  bool is_clique = false;
  VertexSet members;
  bool ok = false;
};

AsymRamsey asym_ramsey(const Graph& g, const VertexSet& within, int ct, int it) {
  AsymRamsey out;
  VertexSet current = within;
  VertexSet cl, is;
  while (!current.empty()) {
    int pivot = current.front();
    VertexSet nb, nonnb;
    for (std::size_t i = 1; i < current.size(); ++i) {
      int v = current[i];
      (g.has_edge(pivot, v) ? nb : nonnb).push_back(v);
    }
    if (nb.size() > nonnb.size()) {
      cl.push_back(pivot);
      current = std::move(nb);
    } else {
      is.push_back(pivot);
      current = std::move(nonnb);
    }
    if (static_cast<int>(cl.size()) >= ct) {
      out.is_clique = true;
      out.members = cl;
      out.ok = true;
      return out;
    }
    if (static_cast<int>(is.size()) >= it) {
      out.members = is;
      out.ok = true;
      return out;
    }
  }
  // Exhausted: report the independent side best-effort.
  out.members = is;
  out.ok = false;
  return out;
}

}  // namespace

StarExtractResult star_forest_extract(const Graph& g, VertexSet X, VertexSet Y, int k,
                                      int t, const Thresholds& th) {
  StarExtractResult out;
  X = sorted_unique(std::move(X));
  Y = sorted_unique(std::move(Y));
  for (int v : Y)
    if (std::binary_search(X.begin(), X.end(), v))
      throw std::invalid_argument("X and Y must be disjoint");
  const bool faithful = th.mode == FptMode::Faithful;
  if (faithful) {
    if (!at_least(BigInt(static_cast<long long>(X.size())), th.f_tk))
      throw std::invalid_argument("faithful mode needs |X| >= f(t,k)");
    for (int x : X) {
      long long dy = 0;
      for (int w : g.neighbors(x))
        if (std::binary_search(Y.begin(), Y.end(), w)) ++dy;
      if (!at_least(BigInt(dy), th.g_tk))
        throw std::invalid_argument("faithful mode needs |N_Y(x)| >= g(t,k) for every x");
    }
  }

  // Independent core of X: greedy pivots, asymmetric targets. A k-clique is
  // already a witness; a 2t-clique would contradict K_{t,t}-freeness.
  BigInt is_need_big = BigInt(k) * (BigInt(t) * [&] {
                         BigInt kt = 1;
                         for (int i = 0; i < t; ++i) kt *= k;
                         return kt;
                       }() + t);
  int is_target = faithful && is_need_big < BigInt(1 << 20)
                      ? is_need_big.convert_to<int>()
                      : static_cast<int>(X.size());
  AsymRamsey core = asym_ramsey(g, X, std::max(k, 2 * t), std::max(is_target, k));
  if (core.ok && core.is_clique) {
    if (static_cast<int>(core.members.size()) >= 2 * t)
      throw ContractBreach("greedy Ramsey found a clique of size 2t; input has a K_{t,t}");
    StarOrCliqueWitness w;
    w.is_clique = true;
    w.clique = VertexSet(core.members.begin(), core.members.begin() + k);
    std::sort(w.clique.begin(), w.clique.end());
    if (auto r = verify_star_or_clique(g, w, k); !r)
      throw std::logic_error("clique witness failed: " + r.reason);
    out.witness = std::move(w);
    return out;
  }
  VertexSet x_cur = sorted_unique(core.members);
  if (static_cast<int>(x_cur.size()) < k) {
    out.failure = "independent core of X smaller than k";
    return out;
  }
  VertexSet y_cur = Y;

  std::vector<int> branch_centers;
  std::vector<VertexSet> branch_leafsets;
  for (int j = k; j >= 1; --j) {
    if (x_cur.empty()) {
      out.failure = "X starved at inductive step j=" + std::to_string(j);
      return out;
    }
    // x minimizing |N_Y(x)|.
    auto ny = [&](int v) {
      VertexSet s;
      for (int w : g.neighbors(v))
        if (std::binary_search(y_cur.begin(), y_cur.end(), w)) s.push_back(w);
      return s;
    };
    int x = -1;
    std::size_t best = 0;
    for (int v : x_cur) {
      std::size_t dv = ny(v).size();
      if (x < 0 || dv < best) { x = v; best = dv; }
    }
    VertexSet ny_x = ny(x);
    if (ny_x.empty()) {
      out.failure = "chosen x has no Y-neighbors at step j=" + std::to_string(j);
      return out;
    }
    // Partition Y by exact X-neighborhood; candidate classes go through x.
    std::map<VertexSet, VertexSet> classes;  // X-neighborhood -> members of Y
    for (int y : ny_x) {
      VertexSet label;
      for (int w : g.neighbors(y))
        if (std::binary_search(x_cur.begin(), x_cur.end(), w)) label.push_back(w);
      classes[label].push_back(y);
    }
    const VertexSet* istar = nullptr;
    const VertexSet* istar_members = nullptr;
    for (const auto& [label, ys] : classes) {
      bool big_enough = th.M_prime.saturated
                            ? false
                            : BigInt(static_cast<long long>(ys.size())) >= th.M_prime.value;
      if (faithful && !big_enough) continue;
      if (!faithful && static_cast<int>(ys.size()) < k) continue;
      if (!istar_members || ys.size() > istar_members->size()) {
        istar = &label;
        istar_members = &ys;
      }
    }
    if (!istar) {
      out.failure = "no exact-neighborhood class of size >= M' through x at step j=" +
                    std::to_string(j);
      return out;
    }
    // X_x: vertices sharing at least a k-th of N_Y(x).
    VertexSet x_x;
    for (int v : x_cur) {
      VertexSet nyv = ny(v);
      VertexSet inter;
      std::set_intersection(nyv.begin(), nyv.end(), ny_x.begin(), ny_x.end(),
                            std::back_inserter(inter));
      if (static_cast<long long>(inter.size()) * k >=
          static_cast<long long>(ny_x.size()))
        x_x.push_back(v);
    }
    // Hypergraph bound audit: beyond N(t,1/k) vertices, more than t*k^t
    // heavy-overlap vertices would certify a K_{t,t}.
    BigInt tkt = BigInt(t);
    for (int i = 0; i < t; ++i) tkt *= k;
    if (BigInt(static_cast<long long>(ny_x.size())) >= th.n_t_eps &&
        BigInt(static_cast<long long>(x_x.size())) > tkt) {
      auto biclique = has_biclique(g, t, 2'000'000);
      throw ContractBreach(
          std::string("hypergraph bound violated; input is not K_{t,t}-free") +
          (biclique ? " (biclique located)" : " (within the audit bound)"));
    }
    branch_centers.push_back(x);
    branch_leafsets.push_back(*istar_members);
    // Recurse on X - (I* u X_x), Y - N_Y(x).
    VertexSet removed = *istar;
    removed.insert(removed.end(), x_x.begin(), x_x.end());
    removed = sorted_unique(std::move(removed));
    VertexSet x_next;
    std::set_difference(x_cur.begin(), x_cur.end(), removed.begin(), removed.end(),
                        std::back_inserter(x_next));
    x_cur = std::move(x_next);
    VertexSet y_next;
    std::set_difference(y_cur.begin(), y_cur.end(), ny_x.begin(), ny_x.end(),
                        std::back_inserter(y_next));
    y_cur = std::move(y_next);
  }

  auto outcome = clique_or_multipartite_is(g, branch_leafsets, k, t, th.mode);
  if (outcome.clique) {
    StarOrCliqueWitness w;
    w.is_clique = true;
    w.clique = *outcome.clique;
    if (auto r = verify_star_or_clique(g, w, k); !r)
      throw std::logic_error("clique witness failed: " + r.reason);
    out.witness = std::move(w);
    return out;
  }
  if (!outcome.failure.empty()) {
    out.failure = "leaf extraction failed: " + outcome.failure;
    return out;
  }
  StarOrCliqueWitness w;
  w.centers = branch_centers;
  w.leaf_sets = outcome.part_independent;
  // Sort stars by center id, keeping leaf sets aligned.
  std::vector<std::size_t> order(w.centers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return w.centers[a] < w.centers[b]; });
  StarOrCliqueWitness sorted_w;
  for (std::size_t i : order) {
    sorted_w.centers.push_back(w.centers[i]);
    sorted_w.leaf_sets.push_back(w.leaf_sets[i]);
  }
  if (auto r = verify_star_or_clique(g, sorted_w, k); !r) {
    out.failure = "star witness failed structural verification: " + r.reason;
    return out;
  }
  out.witness = std::move(sorted_w);
  return out;
}

// ---------------------------------------------------------------------------
// K_{t,t}-free wrapper
// ---------------------------------------------------------------------------

KttFreeResult solve_ktt_free(const Graph& g, int k, int t, CoreProblem problem,
                             const Thresholds& th, bool check_ktt_free,
                             std::uint64_t biclique_budget) {
  KttFreeResult out;
  out.used = th;
  if (check_ktt_free) {
    try {
      if (has_biclique(g, t, biclique_budget).has_value())
        throw ContractBreach("input contains a K_{t,t}");
    } catch (const CapExceeded&) {
      // Beyond the check budget the freeness is caller-asserted.
    }
  }
  const int n = g.vertex_count();
  BigBound gate = th.f_tk.saturated || th.g_tk.saturated
                      ? BigBound{BigInt(1) << 64, true}
                      : BigBound{th.f_tk.value + th.g_tk.value, false};
  VertexSet X;
  for (int v = 0; v < n; ++v)
    if (at_least(BigInt(g.degree(v)), gate)) X.push_back(v);

  if (at_least(BigInt(static_cast<long long>(X.size())), th.f_tk)) {
    VertexSet Y;
    for (int v = 0; v < n; ++v)
      if (!std::binary_search(X.begin(), X.end(), v)) Y.push_back(v);
    auto star = star_forest_extract(g, X, Y, k, t, th);
    if (star.witness) {
      out.yes = true;
      out.branch = "star-extraction";
      out.certificate = certificate_from_stars(
          g, *star.witness,
          problem == CoreProblem::PartialGrundy ? WitnessKind::PartialGrundy
                                                : WitnessKind::BColoring);
      return out;
    }
    if (th.mode == FptMode::Faithful)
      throw std::logic_error("faithful star extraction failed: " + star.failure);
    // Practical fallback: bounded-degree branch with the observed split.
    out.branch = "bounded-degree (star fallback: " + star.failure + ")";
    int d_obs = 0;
    for (int v = 0; v < n; ++v)
      if (!std::binary_search(X.begin(), X.end(), v)) d_obs = std::max(d_obs, g.degree(v));
    if (static_cast<int>(X.size()) > 20)
      throw CapExceeded("fallback high-degree set too large");
    out.certificate = solve_almost_bounded_degree(g, k, d_obs,
                                                  static_cast<int>(X.size()), problem);
    out.yes = out.certificate.has_value();
    return out;
  }

  out.branch = "bounded-degree";
  // d = g+f-1; anything at or above n acts identically, so clamp.
  int d = gate.saturated || gate.value > BigInt(n) ? n : gate.value.convert_to<int>() - 1;
  if (static_cast<int>(X.size()) > 20) throw CapExceeded("high-degree set too large");
  out.certificate = solve_almost_bounded_degree(g, k, d, static_cast<int>(X.size()), problem);
  out.yes = out.certificate.has_value();
  return out;
}

}  // namespace gcol
