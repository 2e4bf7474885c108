#include "gcol/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "gcol/graph_ops.hpp"

namespace gcol {

namespace {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

// Maximal independent sets of g[universe] = maximal cliques of the
// complement, enumerated Bron-Kerbosch style with pivoting.
void maximal_is_rec(const std::vector<Mask>& adj, Mask universe, Mask r, Mask p, Mask x,
                    std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  // Pivot: vertex of p|x with most complement-neighbors inside p.
  int pivot = -1, best = -1;
  for (Mask m = px; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    Mask cnb = universe & ~adj[static_cast<std::size_t>(v)] & ~bit(v);
    int cnt = std::popcount(p & cnb);
    if (cnt > best) { best = cnt; pivot = v; }
  }
  Mask cnb_pivot = universe & ~adj[static_cast<std::size_t>(pivot)] & ~bit(pivot);
  Mask ext = p & ~cnb_pivot;
  while (ext) {
    int v = std::countr_zero(ext);
    ext &= ext - 1;
    Mask cnb = universe & ~adj[static_cast<std::size_t>(v)] & ~bit(v);
    maximal_is_rec(adj, universe, r | bit(v), p & cnb, x & cnb, out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

// Lexicographic order on member lists (prefer sets containing low ids first).
bool mask_lex_less(Mask a, Mask b) {
  while (a && b) {
    int va = std::countr_zero(a), vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0;
}

std::vector<Mask> maximal_independent_sets(const std::vector<Mask>& adj, Mask universe) {
  std::vector<Mask> out;
  if (universe == 0) return out;
  maximal_is_rec(adj, universe, 0, universe, 0, out);
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

VertexSet mask_to_set(Mask m) {
  VertexSet s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

struct GrundyMemoEntry {
  int value;
  Mask best_class;
};

int grundy_rec(const std::vector<Mask>& adj, Mask mask,
               std::unordered_map<Mask, GrundyMemoEntry>& memo) {
  if (mask == 0) return 0;
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second.value;
  int best = -1;
  Mask best_class = 0;
  for (Mask m : maximal_independent_sets(adj, mask)) {
    int val = 1 + grundy_rec(adj, mask & ~m, memo);
    if (val > best) { best = val; best_class = m; }
  }
  memo.emplace(mask, GrundyMemoEntry{best, best_class});
  return best;
}

}  // namespace

SolveResult grundy_number(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw CapExceeded("grundy_number cap exceeded");
  SolveResult res;
  if (n == 0) return res;
  auto adj = g.adjacency_masks();
  std::unordered_map<Mask, GrundyMemoEntry> memo;
  Mask full = (n == 64) ? ~Mask{0} : (bit(n) - 1);
  res.value = grundy_rec(adj, full, memo);
  std::vector<VertexSet> classes;
  for (Mask m = full; m;) {
    Mask cls = memo.at(m).best_class;
    classes.push_back(mask_to_set(cls));
    m &= ~cls;
  }
  res.certificate =
      certificate_from_classes(WitnessKind::Grundy, std::move(classes), std::nullopt);
  if (auto r = verify_grundy(g, res.certificate); !r)
    throw std::logic_error("grundy certificate failed verification: " + r.reason);
  return res;
}

int grundy_number_by_orderings(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw CapExceeded("grundy_number_by_orderings cap exceeded");
  if (n == 0) return 0;
  auto adj = g.adjacency_masks();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> color(static_cast<std::size_t>(n));
  int best = 0;
  do {
    int max_color = 0;
    Mask colored = 0;
    for (int v : order) {
      Mask used = 0;
      Mask nbs = adj[static_cast<std::size_t>(v)] & colored;
      while (nbs) {
        int w = std::countr_zero(nbs);
        nbs &= nbs - 1;
        used |= bit(color[static_cast<std::size_t>(w)] - 1);
      }
      int c = std::countr_one(used) + 1;
      color[static_cast<std::size_t>(v)] = c;
      colored |= bit(v);
      max_color = std::max(max_color, c);
    }
    best = std::max(best, max_color);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

int rooted_grundy(const Graph& g, int v, int cap) {
  const int n = g.vertex_count();
  g.check_vertex(v);
  if (n > cap) throw CapExceeded("rooted_grundy cap exceeded");
  auto adj = g.adjacency_masks();
  // round[T] = max round, over maximal-IS removal sequences of g[T], in which
  // v's class is removed; defined for subsets T containing v. Bottom-up works
  // because removing a class shrinks the mask.
  std::vector<int> round(std::size_t{1} << n, 0);
  int best = 0;
  for (Mask mask = bit(v); mask < (Mask{1} << n); ++mask) {
    if (!(mask & bit(v))) continue;
    int r = 0;
    for (Mask m : maximal_independent_sets(adj, mask)) {
      if (m & bit(v))
        r = std::max(r, 1);
      else
        r = std::max(r, 1 + round[mask & ~m]);
    }
    round[mask] = r;
    best = std::max(best, r);
  }
  return best;
}

int sampled_grundy_lower_bound(const Graph& g, int samples, std::uint64_t seed) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> color(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 2, 0);
  int best = 0;
  for (int s = 0; s < samples; ++s) {
    std::shuffle(order.begin(), order.end(), rng);
    std::fill(color.begin(), color.end(), 0);
    for (int v : order) {
      for (int w : g.neighbors(v)) {
        int cw = color[static_cast<std::size_t>(w)];
        if (cw > 0) used[static_cast<std::size_t>(cw)] = 1;
      }
      int c = 1;
      while (used[static_cast<std::size_t>(c)]) ++c;
      for (int w : g.neighbors(v)) {
        int cw = color[static_cast<std::size_t>(w)];
        if (cw > 0) used[static_cast<std::size_t>(cw)] = 0;
      }
      color[static_cast<std::size_t>(v)] = c;
      best = std::max(best, c);
    }
  }
  return best;
}

namespace {

// Enumerates connected induced subgraphs containing `v0` whose other members
// are all > v0, by the usual extension/banned discipline (each set visited
// exactly once). Visitor returns true to stop.
template <typename Visit>
bool connected_sets_from(const std::vector<Mask>& adj, int v0, int limit, Mask s,
                         Mask cand, Mask banned, const Visit& visit) {
  if (visit(s)) return true;
  if (std::popcount(s) >= limit) return false;
  while (cand) {
    int u = std::countr_zero(cand);
    cand &= cand - 1;
    Mask grown = adj[static_cast<std::size_t>(u)] & ~s & ~banned & ~cand;
    grown &= ~(bit(v0) | (bit(v0) - 1));  // keep only ids > v0
    if (connected_sets_from(adj, v0, limit, s | bit(u), cand | grown, banned, visit))
      return true;
    banned |= bit(u);
  }
  return false;
}

}  // namespace

std::optional<WitnessCertificate> grundy_witness_search(const Graph& g, int k,
                                                        int size_budget) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int n = g.vertex_count();
  if (k - 1 >= 31 || (1 << (k - 1)) > size_budget)
    throw CapExceeded("witness size 2^(k-1) exceeds the subgraph-size budget");
  if (n > 64) throw CapExceeded("grundy_witness_search needs n <= 64");
  const int limit = 1 << (k - 1);
  auto adj = g.adjacency_masks();
  std::optional<WitnessCertificate> found;
  for (int v0 = 0; v0 < n && !found; ++v0) {
    Mask high = ~(bit(v0) | (bit(v0) - 1));
    connected_sets_from(adj, v0, limit, bit(v0),
                        adj[static_cast<std::size_t>(v0)] & high, 0, [&](Mask s) {
      if (std::popcount(s) < k) return false;
      VertexSet vs = mask_to_set(s);
      auto ind = induced_subgraph(g, vs);
      SolveResult sub = grundy_number(ind.graph, 64);
      if (sub.value < k) return false;
      std::vector<VertexSet> classes;
      for (const auto& cls : sub.certificate.classes) {
        VertexSet mapped;
        for (int u : cls) mapped.push_back(ind.old_of_new[static_cast<std::size_t>(u)]);
        classes.push_back(sorted_unique(std::move(mapped)));
      }
      found = certificate_from_classes(WitnessKind::Grundy, std::move(classes),
                                       std::nullopt);
      return true;
    });
  }
  if (found) {
    if (auto r = verify_grundy(g, *found); !r)
      throw std::logic_error("witness search certificate failed: " + r.reason);
  }
  return found;
}

// ---------------------------------------------------------------------------
// Partial Grundy / b-chromatic core
// ---------------------------------------------------------------------------

namespace {

// Chain DP over the blocks of a proper partition: pick an ordered subfamily
// B_1..B_k such that each B_i (i >= 2) has a member adjacent to all earlier
// chosen blocks. Returns the best k with reconstruction data.
struct ChainResult {
  int best = 0;
  std::vector<int> chain;    // block indices, chain[0] = color 1
  std::vector<int> centers;  // per chain position
};

ChainResult best_block_chain(const Graph& g, const std::vector<VertexSet>& blocks) {
  const int m = static_cast<int>(blocks.size());
  ChainResult out;
  if (m == 0) return out;
  if (m > 20) throw CapExceeded("block chain DP limited to 20 blocks");
  // touches[x] = bitmask of blocks vertex x is adjacent to.
  std::vector<Mask> touches(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int b = 0; b < m; ++b)
    for (int x : blocks[static_cast<std::size_t>(b)])
      for (int w : g.neighbors(x)) touches[static_cast<std::size_t>(w)] |= bit(b);
  const Mask all = bit(m) - 1;
  std::vector<char> feasible(std::size_t{1} << m, 0);
  std::vector<int> last_block(std::size_t{1} << m, -1);
  std::vector<int> last_center(std::size_t{1} << m, -1);
  feasible[0] = 1;
  Mask best_set = 0;
  for (Mask t = 1; t <= all; ++t) {
    for (Mask mm = t; mm; mm &= mm - 1) {
      int b = std::countr_zero(mm);
      if (!feasible[t & ~bit(b)]) continue;
      Mask rest = t & ~bit(b);
      int center = -1;
      for (int x : blocks[static_cast<std::size_t>(b)])
        if ((touches[static_cast<std::size_t>(x)] & rest) == rest) { center = x; break; }
      if (center < 0) continue;
      feasible[t] = 1;
      last_block[t] = b;
      last_center[t] = center;
      break;
    }
    if (feasible[t] && std::popcount(t) > std::popcount(best_set)) best_set = t;
  }
  out.best = std::popcount(best_set);
  for (Mask t = best_set; t;) {
    out.chain.push_back(last_block[t]);
    out.centers.push_back(last_center[t]);
    t &= ~bit(last_block[t]);
  }
  std::reverse(out.chain.begin(), out.chain.end());
  std::reverse(out.centers.begin(), out.centers.end());
  return out;
}

struct PartitionSearch {
  const Graph& g;
  int n;
  std::vector<VertexSet> blocks;
  int best = 0;
  std::vector<VertexSet> best_blocks;
  ChainResult best_chain;

  explicit PartitionSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

  bool proper_in_block(int v, const VertexSet& block) const {
    for (int u : block)
      if (g.has_edge(u, v)) return false;
    return true;
  }

  void complete() {
    if (static_cast<int>(blocks.size()) <= best) return;
    ChainResult chain = best_block_chain(g, blocks);
    if (chain.best > best) {
      best = chain.best;
      best_blocks = blocks;
      best_chain = chain;
    }
  }

  void rec(int v) {
    if (best == n) return;  // cannot improve
    if (v == n) { complete(); return; }
    if (static_cast<int>(blocks.size()) + (n - v) <= best) return;
    // Index loop: the recursive call grows `blocks`.
    std::size_t existing = blocks.size();
    for (std::size_t bi = 0; bi < existing; ++bi) {
      if (proper_in_block(v, blocks[bi])) {
        blocks[bi].push_back(v);
        rec(v + 1);
        blocks[bi].pop_back();
      }
    }
    blocks.push_back({v});
    rec(v + 1);
    blocks.pop_back();
  }
};

WitnessCertificate certificate_from_chain(const std::vector<VertexSet>& blocks,
                                          const ChainResult& chain, WitnessKind kind) {
  std::vector<VertexSet> classes;
  for (int b : chain.chain) classes.push_back(blocks[static_cast<std::size_t>(b)]);
  return certificate_from_classes(kind, std::move(classes), chain.centers);
}

}  // namespace

int partial_grundy_by_partitions(const Graph& g, int cap) {
  if (g.vertex_count() > cap) throw CapExceeded("partial grundy partition cap exceeded");
  if (g.vertex_count() == 0) return 0;
  PartitionSearch search(g);
  search.rec(0);
  return search.best;
}

namespace {

// Center-directed backtracking shared by the two witness kinds. Colors are
// assigned incrementally with properness checks; support = colored vertices.
// Distinct support orderings converge to identical assignments, so failed
// states are memoized at class boundaries.
struct CenterSearch {
  const Graph& g;
  int k;
  std::vector<int> color;    // 0 = unassigned
  std::vector<int> centers;  // 1-based by class
  bool bcore;                // centers need [k] \ {i} instead of [1..i-1]
  std::unordered_set<std::string> failed_states;
  std::uint64_t nodes = 0;
  std::uint64_t node_budget = 400'000'000;

  CenterSearch(const Graph& graph, int order, bool b)
      : g(graph), k(order),
        color(static_cast<std::size_t>(graph.vertex_count()), 0),
        centers(static_cast<std::size_t>(order) + 1, -1), bcore(b) {}

  // For the partial-Grundy order the remaining problem below class i depends
  // only on the colors (additions never unsatisfy a served center). For the
  // b-core order the fixed center identities matter too.
  std::string state_key(int i, bool with_centers) const {
    std::string key(color.size() + 1, '\0');
    key[0] = static_cast<char>(i);
    for (std::size_t v = 0; v < color.size(); ++v)
      key[v + 1] = static_cast<char>(color[v]);
    if (with_centers)
      for (int j = i; j <= k; ++j)
        key += static_cast<char>(centers[static_cast<std::size_t>(j)] + 1);
    return key;
  }

  void count_node() {
    if (++nodes > node_budget)
      throw CapExceeded("center-directed search budget exceeded");
  }

  bool assignable(int v, int c) const {
    if (color[static_cast<std::size_t>(v)] != 0) return false;
    for (int w : g.neighbors(v))
      if (color[static_cast<std::size_t>(w)] == c) return false;
    return true;
  }

  // A center of class i must be able to collect its required lower colors
  // among existing neighbor colors plus fresh assignments.
  bool center_feasible(int v, int i) const {
    int needed = bcore ? k - 1 : i - 1;
    std::uint64_t seen = 0;
    int unassigned = 0;
    for (int w : g.neighbors(v)) {
      int cw = color[static_cast<std::size_t>(w)];
      if (cw == 0)
        ++unassigned;
      else if (cw <= 64 && cw != i)
        seen |= std::uint64_t{1} << (cw - 1);
    }
    int have = 0;
    for (int j = 1; j <= (bcore ? k : i - 1); ++j)
      if (j != i && (seen & (std::uint64_t{1} << (j - 1)))) ++have;
    return have + unassigned >= needed;
  }

  bool needed_colors_of(int i, std::vector<int>& out) const {
    out.clear();
    if (bcore) {
      for (int j = 1; j <= k; ++j)
        if (j != i) out.push_back(j);
    } else {
      for (int j = 1; j < i; ++j) out.push_back(j);
    }
    return true;
  }

  bool fill_supports(int i, int center, const std::vector<int>& needed, std::size_t idx,
                     const std::function<bool()>& next) {
    if (idx == needed.size()) return next();
    int j = needed[idx];
    for (int w : g.neighbors(center))
      if (color[static_cast<std::size_t>(w)] == j)
        return fill_supports(i, center, needed, idx + 1, next);
    for (int w : g.neighbors(center)) {
      if (!assignable(w, j)) continue;
      color[static_cast<std::size_t>(w)] = j;
      if (fill_supports(i, center, needed, idx + 1, next)) return true;
      color[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }

  // Partial Grundy: classes processed top-down, supports filled per center.
  bool solve_partial(int i) {
    if (i == 0) return true;
    count_node();
    std::string key = state_key(i, false);
    if (failed_states.count(key)) return false;
    int min_deg = i - 1;
    std::vector<int> needed;
    needed_colors_of(i, needed);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) < min_deg) continue;
      bool was_colored = color[static_cast<std::size_t>(v)] == i;
      if (!was_colored) {
        if (!assignable(v, i)) continue;
        color[static_cast<std::size_t>(v)] = i;
      }
      if (center_feasible(v, i)) {
        centers[static_cast<std::size_t>(i)] = v;
        if (fill_supports(i, v, needed, 0, [&] { return solve_partial(i - 1); }))
          return true;
        centers[static_cast<std::size_t>(i)] = -1;
      }
      if (!was_colored) color[static_cast<std::size_t>(v)] = 0;
    }
    failed_states.insert(std::move(key));
    return false;
  }

  // b-core: choose all k centers, then fill supports center by center.
  bool choose_centers(int i) {
    if (i > k) return satisfy_center(1);
    count_node();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) < k - 1) continue;
      if (!assignable(v, i)) continue;
      color[static_cast<std::size_t>(v)] = i;
      centers[static_cast<std::size_t>(i)] = v;
      if (choose_centers(i + 1)) return true;
      centers[static_cast<std::size_t>(i)] = -1;
      color[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  bool satisfy_center(int i) {
    if (i > k) return true;
    count_node();
    std::string key = state_key(i, true);
    if (failed_states.count(key)) return false;
    std::vector<int> needed;
    needed_colors_of(i, needed);
    bool ok = fill_supports(i, centers[static_cast<std::size_t>(i)], needed, 0,
                            [&] { return satisfy_center(i + 1); });
    if (!ok) failed_states.insert(std::move(key));
    return ok;
  }

  WitnessCertificate build_certificate(WitnessKind kind) const {
    std::vector<VertexSet> classes(static_cast<std::size_t>(k));
    for (int v = 0; v < g.vertex_count(); ++v) {
      int c = color[static_cast<std::size_t>(v)];
      if (c > 0) classes[static_cast<std::size_t>(c - 1)].push_back(v);
    }
    std::vector<int> cs(centers.begin() + 1, centers.end());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i] < 0) {
        if (classes[i].empty()) throw std::logic_error("class without vertices");
        cs[i] = classes[i].front();
      }
    }
    return certificate_from_classes(kind, std::move(classes), std::move(cs));
  }
};

}  // namespace

std::optional<WitnessCertificate> partial_grundy_at_least(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k > g.vertex_count()) return std::nullopt;
  CenterSearch search(g, k, false);
  if (!search.solve_partial(k)) return std::nullopt;
  auto cert = search.build_certificate(WitnessKind::PartialGrundy);
  if (auto r = verify_partial_grundy(g, cert); !r)
    throw std::logic_error("partial grundy search certificate failed: " + r.reason);
  return cert;
}

std::optional<WitnessCertificate> bcore_at_least(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k > g.vertex_count()) return std::nullopt;
  CenterSearch search(g, k, true);
  if (!search.choose_centers(1)) return std::nullopt;
  auto cert = search.build_certificate(WitnessKind::BColoring);
  if (auto r = verify_b_coloring(g, cert); !r)
    throw std::logic_error("bcore search certificate failed: " + r.reason);
  return cert;
}

SolveResult partial_grundy_number(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw CapExceeded("partial_grundy_number cap exceeded");
  SolveResult res;
  if (n == 0) return res;
  PartitionSearch search(g);
  search.rec(0);
  res.value = search.best;
  // The center-directed route must agree with the partition enumeration.
  int by_centers = 0;
  std::optional<WitnessCertificate> cert;
  for (int k = 1; k <= n; ++k) {
    auto c = partial_grundy_at_least(g, k);
    if (!c) break;
    by_centers = k;
    cert = std::move(c);
  }
  if (by_centers != res.value)
    throw std::logic_error("partial grundy routes disagree: partitions=" +
                           std::to_string(res.value) +
                           " centers=" + std::to_string(by_centers));
  res.certificate = certificate_from_chain(search.best_blocks, search.best_chain,
                                           WitnessKind::PartialGrundy);
  if (auto r = verify_partial_grundy(g, res.certificate); !r)
    throw std::logic_error("partial grundy certificate failed: " + r.reason);
  return res;
}

namespace {

// Max order of a b-coloring over all induced subgraphs, by brute force:
// enumerate supports, then proper partitions, then check the b-condition.
struct BcoreEnum {
  const Graph& g;
  VertexSet support;
  std::vector<VertexSet> blocks;
  int best = 0;

  explicit BcoreEnum(const Graph& graph) : g(graph) {}

  bool b_condition() const {
    const int m = static_cast<int>(blocks.size());
    std::vector<Mask> touches(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int b = 0; b < m; ++b)
      for (int x : blocks[static_cast<std::size_t>(b)])
        for (int w : g.neighbors(x)) touches[static_cast<std::size_t>(w)] |= bit(b);
    for (int b = 0; b < m; ++b) {
      Mask want = (bit(m) - 1) & ~bit(b);
      bool has_center = false;
      for (int x : blocks[static_cast<std::size_t>(b)])
        if ((touches[static_cast<std::size_t>(x)] & want) == want) { has_center = true; break; }
      if (!has_center) return false;
    }
    return true;
  }

  void rec(std::size_t idx) {
    if (idx == support.size()) {
      int m = static_cast<int>(blocks.size());
      if (m > best && b_condition()) best = m;
      return;
    }
    if (static_cast<int>(blocks.size()) + static_cast<int>(support.size() - idx) <= best)
      return;
    int v = support[idx];
    std::size_t existing = blocks.size();
    for (std::size_t bi = 0; bi < existing; ++bi) {
      bool ok = true;
      for (int u : blocks[bi])
        if (g.has_edge(u, v)) { ok = false; break; }
      if (!ok) continue;
      blocks[bi].push_back(v);
      rec(idx + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({v});
    rec(idx + 1);
    blocks.pop_back();
  }
};

}  // namespace

int bcore_order_by_enumeration(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw CapExceeded("bcore enumeration cap exceeded");
  BcoreEnum search(g);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) <= search.best) continue;
    search.support = mask_to_set(s);
    search.rec(0);
  }
  return search.best;
}

SolveResult b_chromatic_core_order(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw CapExceeded("b_chromatic_core_order cap exceeded");
  SolveResult res;
  if (n == 0) return res;
  for (int k = 1; k <= n; ++k) {
    auto cert = bcore_at_least(g, k);
    if (!cert) break;
    res.value = k;
    res.certificate = std::move(*cert);
  }
  if (n <= 8) {
    int oracle = bcore_order_by_enumeration(g, 8);
    if (oracle != res.value)
      throw std::logic_error("bcore routes disagree: search=" + std::to_string(res.value) +
                             " enumeration=" + std::to_string(oracle));
  }
  return res;
}

}  // namespace gcol
