#pragma once

// Graph families: Turán graphs, Mycielskians, blow-ups, blown-up and layered
// Mycielskians, and the near-extremal lower-bound constructions built from
// them. Every construction returns a ConstructionArtifact whose vertex
// classes are named and whose deficiency claim is checked at build time.

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xstab/errors.hpp"
#include "xstab/graph.hpp"
#include "xstab/search.hpp"

namespace xstab {

using NamedSets = std::vector<std::pair<std::string, VertexSet>>;

struct ConstructionArtifact {
  std::string family;
  Graph graph;
  int k = 2;
  // Ordered partition of the vertex range.
  NamedSets classes;
  // Additional named subsets that are not part of the partition.
  NamedSets blocks;
  std::map<std::string, std::int64_t> params;
  std::vector<std::string> notes;
  // e(graph) >= t_k(n) - claimed_deficiency holds (checked at build time).
  std::int64_t claimed_deficiency = 0;
  std::int64_t actual_deficiency = 0;

  const VertexSet& cls(const std::string& name) const {
    for (const auto& [label, set] : classes)
      if (label == name) return set;
    for (const auto& [label, set] : blocks)
      if (label == name) return set;
    throw InvalidParameter("no vertex class named " + name);
  }
};

struct MycielskiParams {
  int k = 2;
  int l = 1;
  int a = 0;
  int b = 0;
  int c = 0;
};

inline std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw InvalidParameter("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

namespace detail {

// Consecutive vertex blocks of the given sizes.
class VertexAllocator {
 public:
  explicit VertexAllocator(int n) : n_(n) {}

  VertexSet take(int size) {
    VertexSet s(n_);
    for (int i = 0; i < size; ++i) s.insert(next_++);
    return s;
  }
  int used() const { return next_; }

 private:
  int n_;
  int next_ = 0;
};

inline void join(Graph& g, const VertexSet& a, const VertexSet& b) {
  a.for_each([&](int u) { b.for_each([&](int v) { g.add_edge(u, v); }); });
}

// Certifies the artifact: classes partition the vertex range and the
// deficiency claim holds.
inline ConstructionArtifact finish(ConstructionArtifact art) {
  const int n = art.graph.order();
  VertexSet seen(n);
  int total = 0;
  for (const auto& [label, set] : art.classes) {
    if (seen.intersects(set)) throw ConstructionError("class " + label + " overlaps another class");
    seen |= set;
    total += set.count();
  }
  if (total != n) throw ConstructionError("vertex classes do not cover the vertex range");
  art.actual_deficiency = turan_edge_count(n, art.k) - static_cast<std::int64_t>(art.graph.edge_count());
  if (art.claimed_deficiency < art.actual_deficiency)
    throw ConstructionError("deficiency " + std::to_string(art.actual_deficiency) + " exceeds claimed " +
                                std::to_string(art.claimed_deficiency),
                            art.actual_deficiency);
  return art;
}

inline std::string label(char prefix, int i) { return std::string(1, prefix) + std::to_string(i); }

// k V-classes with the given sizes, l layers of k W-classes of size b, and an
// apex class of size c, wired as the l-layer blown-up Mycielskian.
inline ConstructionArtifact layered_mycielskian(int k, int l, std::span<const int> v_sizes, int b, int c) {
  int n = c;
  for (int s : v_sizes) n += s;
  n += k * l * b;

  ConstructionArtifact art;
  art.graph = Graph(n);
  art.k = k;
  VertexAllocator alloc(n);

  std::vector<VertexSet> v;
  for (int i = 0; i < k; ++i) v.push_back(alloc.take(v_sizes[static_cast<std::size_t>(i)]));
  std::vector<std::vector<VertexSet>> w(static_cast<std::size_t>(l));
  for (int m = 0; m < l; ++m)
    for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(m)].push_back(alloc.take(b));
  VertexSet u = alloc.take(c);

  Graph& g = art.graph;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (i < j) join(g, v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
      join(g, v[static_cast<std::size_t>(j)], w[0][static_cast<std::size_t>(i)]);
      for (int m = 0; m + 1 < l; ++m)
        join(g, w[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)],
             w[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(j)]);
    }
  for (int i = 0; i < k; ++i) join(g, w[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i)], u);

  for (int i = 0; i < k; ++i) art.classes.emplace_back(label('V', i + 1), v[static_cast<std::size_t>(i)]);
  for (int m = 0; m < l; ++m)
    for (int i = 0; i < k; ++i)
      art.classes.emplace_back(label('W', i + 1) + "^" + std::to_string(m + 1),
                               w[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)]);
  art.classes.emplace_back("U", u);
  return art;
}

// Sizes of k V-classes sharing `total` vertices: equal, with the remainder
// going one per class to the first classes.
inline std::vector<int> spread(std::int64_t total, int k) {
  std::vector<int> sizes(static_cast<std::size_t>(k), static_cast<int>(total / k));
  for (int i = 0; i < total % k; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

inline void require_budget(int n, int k, std::int64_t f) {
  if (k < 2) throw InvalidParameter("class count k must be at least 2");
  if (n < 1) throw InvalidParameter("vertex count must be positive");
  if (f < 2 * static_cast<std::int64_t>(n)) throw InvalidParameter("deficiency budget f must be at least 2n");
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline ConstructionArtifact complete_multipartite(std::span<const int> sizes, std::string family, int k) {
  int n = 0;
  for (int s : sizes) {
    if (s < 0) throw InvalidParameter("part sizes must be nonnegative");
    n += s;
  }
  ConstructionArtifact art;
  art.family = std::move(family);
  art.graph = Graph(n);
  art.k = k;
  detail::VertexAllocator alloc(n);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto part = alloc.take(sizes[i]);
    for (const auto& [label, prev] : art.classes) detail::join(art.graph, prev, part);
    art.classes.emplace_back(detail::label('V', static_cast<int>(i) + 1), std::move(part));
  }
  return art;
}

/// T_k(n): complete k-partite, part sizes differing by at most one.
inline ConstructionArtifact turan_graph(int n, int k) {
  auto sizes = turan_part_sizes(n, k);
  auto art = complete_multipartite(sizes, "turan", k);
  art.params = {{"n", n}, {"k", k}};
  return detail::finish(std::move(art));
}

/// M(g) on V, V' = {v'}, {u}: vertex v' is n + v and the apex is 2n.
inline Graph mycielskian(const Graph& g) {
  const int n = g.order();
  Graph m(2 * n + 1);
  for (const auto& e : g.edges()) {
    m.add_edge(e.u, e.v);
    m.add_edge(e.u, n + e.v);
    m.add_edge(e.v, n + e.u);
  }
  for (int v = 0; v < n; ++v) m.add_edge(n + v, 2 * n);
  return m;
}

/// Each base vertex v becomes an independent set of mult[v] vertices; copies
/// of u and w are adjacent iff uw is a base edge. Copies are numbered in base
/// vertex order.
inline Graph blowup(const Graph& base, std::span<const int> mult) {
  if (static_cast<int>(mult.size()) != base.order())
    throw InvalidParameter("blowup needs one multiplicity per base vertex");
  std::vector<int> start(mult.size() + 1, 0);
  for (std::size_t v = 0; v < mult.size(); ++v) {
    if (mult[v] < 0) throw InvalidParameter("multiplicities must be nonnegative");
    start[v + 1] = start[v] + mult[v];
  }
  Graph g(start.back());
  for (const auto& e : base.edges())
    for (int x = start[static_cast<std::size_t>(e.u)]; x < start[static_cast<std::size_t>(e.u) + 1]; ++x)
      for (int y = start[static_cast<std::size_t>(e.v)]; y < start[static_cast<std::size_t>(e.v) + 1]; ++y)
        g.add_edge(x, y);
  return g;
}

/// M_k(a,b,c): the blow-up of M(K_k) with V-, W- and apex classes of sizes
/// a, b and c.
inline ConstructionArtifact mk_blowup(int k, int a, int b, int c) {
  if (k < 2) throw InvalidParameter("class count k must be at least 2");
  if (a < 0 || b < 0 || c < 0) throw InvalidParameter("part sizes must be nonnegative");
  std::vector<int> v_sizes(static_cast<std::size_t>(k), a);
  auto art = detail::layered_mycielskian(k, 1, v_sizes, b, c);
  for (auto& [label, set] : art.classes)
    if (label.size() > 2 && label[0] == 'W') label = label.substr(0, label.find('^'));
  art.family = "mk_blowup";
  art.params = {{"k", k}, {"a", a}, {"b", b}, {"c", c}};
  art.claimed_deficiency = turan_edge_count(art.graph.order(), k) - static_cast<std::int64_t>(art.graph.edge_count());
  return detail::finish(std::move(art));
}

/// M_k^{(l)}(a,b,c): l layers of W-classes between the V-classes and the apex.
inline ConstructionArtifact mk_layered(int k, int l, int a, int b, int c) {
  if (k < 2) throw InvalidParameter("class count k must be at least 2");
  if (l < 1) throw InvalidParameter("layer count must be at least 1");
  if (a < 0 || b < 0 || c < 0) throw InvalidParameter("part sizes must be nonnegative");
  std::vector<int> v_sizes(static_cast<std::size_t>(k), a);
  auto art = detail::layered_mycielskian(k, l, v_sizes, b, c);
  art.family = "mk_layered";
  art.params = {{"k", k}, {"l", l}, {"a", a}, {"b", b}, {"c", c}};
  art.claimed_deficiency = turan_edge_count(art.graph.order(), k) - static_cast<std::int64_t>(art.graph.edge_count());
  return detail::finish(std::move(art));
}

/// T_k(n) with the first (largest) class enlarged by m and the last
/// (smallest) class shrunk by m.
inline ConstructionArtifact imbalanced_turan(int n, int k, int m) {
  if (k < 2) throw InvalidParameter("class count k must be at least 2");
  auto sizes = turan_part_sizes(n, k);
  if (m < 0 || m > sizes.back())
    throw InvalidParameter("imbalance m must lie in [0, smallest part size]");
  sizes.front() += m;
  sizes.back() -= m;
  auto art = complete_multipartite(sizes, "imbalanced", k);
  art.params = {{"n", n}, {"k", k}, {"m", m}};
  art.claimed_deficiency = turan_edge_count(n, k) - static_cast<std::int64_t>(art.graph.edge_count());
  return detail::finish(std::move(art));
}

/// K_{k+1}-free blown-up Mycielskian with small W-classes:
/// M_k((n - s - kr)/k, r, s) with r = max(1, floor(sqrt(f)/k^2)) and
/// s = max(1, floor(f/2n)); the V-class remainder goes one per class.
/// Certifies e >= t_k(n) - f.
inline ConstructionArtifact clique_free_blowup(int n, int k, std::int64_t f) {
  detail::require_budget(n, k, f);
  const std::int64_t r = std::max<std::int64_t>(1, isqrt(f) / (static_cast<std::int64_t>(k) * k));
  const std::int64_t s = std::max<std::int64_t>(1, f / (2 * static_cast<std::int64_t>(n)));
  const std::int64_t v_total = n - s - k * r;
  if (v_total < k)
    throw ConstructionError("rounded parameters leave " + std::to_string(v_total) + " vertices for " +
                            std::to_string(k) + " V-classes");
  const auto v_sizes = detail::spread(v_total, k);
  auto art = detail::layered_mycielskian(k, 1, v_sizes, static_cast<int>(r), static_cast<int>(s));
  for (auto& [label, set] : art.classes)
    if (label[0] == 'W') label = label.substr(0, label.find('^'));
  art.family = "counter1";
  art.params = {{"n", n}, {"k", k}, {"f", f}, {"r", r}, {"s", s}, {"a", v_total / k}, {"a_remainder", v_total % k}};
  art.claimed_deficiency = f;
  return detail::finish(std::move(art));
}

/// Layered blown-up Mycielskian M_k^{(N)}((n - (Nk+1)s)/k, s, s) with
/// s = max(1, floor(f/2n)). Its (k+1)-chromatic subgraphs have at least
/// N + 2 vertices. Certifies e >= t_k(n) - f.
inline ConstructionArtifact layered_blowup(int n, int k, int layers, std::int64_t f) {
  detail::require_budget(n, k, f);
  if (layers < 1) throw InvalidParameter("layer count N must be at least 1");
  const std::int64_t s = std::max<std::int64_t>(1, f / (2 * static_cast<std::int64_t>(n)));
  const std::int64_t v_total = n - (static_cast<std::int64_t>(layers) * k + 1) * s;
  if (v_total < k)
    throw ConstructionError("rounded parameters leave " + std::to_string(v_total) + " vertices for " +
                            std::to_string(k) + " V-classes");
  const auto v_sizes = detail::spread(v_total, k);
  auto art = detail::layered_mycielskian(k, layers, v_sizes, static_cast<int>(s), static_cast<int>(s));
  art.family = "propcount1";
  art.params = {{"n", n}, {"k", k}, {"N", layers}, {"f", f}, {"s", s}, {"a", v_total / k}, {"a_remainder", v_total % k}};
  art.claimed_deficiency = f;
  return detail::finish(std::move(art));
}

namespace detail {

// Smallest q >= 1 with q^k >= f/n + 1.
inline std::int64_t qary_base(int n, int k, std::int64_t f) {
  for (std::int64_t q = 1;; ++q) {
    std::int64_t p = 1;
    for (int i = 0; i < k; ++i) p *= q;
    if (p * n >= f + n) return q;
  }
}

inline ConstructionArtifact qary_build(int n, int k, std::int64_t scale) {
  const std::int64_t w = isqrt(scale);
  const std::int64_t u = (scale + n - 1) / n;
  const std::int64_t q = qary_base(n, k, scale);
  const std::int64_t block = w / q;
  if (block < 1) throw ConstructionError("q-ary blocks would be empty: floor(sqrt(f)/q) = 0");
  const std::int64_t v_total = n - k * w - u;
  if (v_total < k)
    throw ConstructionError("block sizes leave " + std::to_string(v_total) + " vertices for " + std::to_string(k) +
                            " V-classes");

  const auto v_sizes = spread(v_total, k);
  auto art = layered_mycielskian(k, 1, v_sizes, static_cast<int>(w), 0);
  // layered_mycielskian allocated no apex; rebuild the graph with U appended.
  Graph g(n);
  for (const auto& e : art.graph.edges()) g.add_edge(e.u, e.v);
  const int u_start = art.graph.order();
  NamedSets classes;
  for (auto& [label, set] : art.classes) {
    if (label == "U") continue;
    VertexSet widened(n);
    set.for_each([&](int x) { widened.insert(x); });
    classes.emplace_back(label[0] == 'W' ? label.substr(0, label.find('^')) : label, std::move(widened));
  }

  NamedSets blocks;
  std::vector<std::vector<VertexSet>> sub(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto w_members = classes[static_cast<std::size_t>(k + i)].second.members();
    for (std::int64_t a = 0; a < q; ++a) {
      VertexSet blk(n);
      for (std::int64_t x = a * block; x < (a + 1) * block; ++x) blk.insert(w_members[static_cast<std::size_t>(x)]);
      blocks.emplace_back(label('W', i + 1) + "(" + std::to_string(a) + ")", blk);
      sub[static_cast<std::size_t>(i)].push_back(std::move(blk));
    }
  }

  VertexSet uset(n);
  for (std::int64_t j = 1; j <= u; ++j) {
    const int uj = u_start + static_cast<int>(j - 1);
    uset.insert(uj);
    std::int64_t rest = j;
    for (int i = 0; i < k; ++i) {
      const std::int64_t digit = rest % q;
      rest /= q;
      sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(digit)].for_each([&](int x) { g.add_edge(uj, x); });
    }
    if (rest != 0) throw ConstructionError("apex index exceeds k base-q digits");
  }
  classes.emplace_back("U", std::move(uset));

  ConstructionArtifact out;
  out.family = "qary";
  out.graph = std::move(g);
  out.k = k;
  out.classes = std::move(classes);
  out.blocks = std::move(blocks);
  out.params = {{"n", n}, {"k", k}, {"scale", scale}, {"q", q}, {"block", block},
                {"w", w},  {"u", u}, {"a", v_total / k}, {"a_remainder", v_total % k}};
  out.notes.push_back("|U| = ceil(f/n) as in the rewiring step; the unrewired start graph used s = f/n");
  out.notes.push_back("W-vertices outside the q blocks keep their V adjacency and receive no U edges");
  return out;
}

}  // namespace detail

/// Rewired blown-up Mycielskian avoiding M_k(1,1,2): W-classes of size
/// floor(sqrt f), |U| = ceil(f/n), and apex u_j joined to the union of the
/// blocks W_i^(a_i) where a_1..a_k are the base-q digits of j. Two distinct
/// apex vertices have disjoint neighbourhoods inside some W_i.
/// The claimed deficiency is the exact one; see qary_within_budget for the
/// budget-certified variant.
inline ConstructionArtifact qary_rewired_blowup(int n, int k, std::int64_t f) {
  detail::require_budget(n, k, f);
  auto art = detail::qary_build(n, k, f);
  art.params["f"] = f;
  art.claimed_deficiency = turan_edge_count(n, k) - static_cast<std::int64_t>(art.graph.edge_count());
  return detail::finish(std::move(art));
}

/// The q-ary construction at the largest scale g <= f whose deficiency fits
/// the budget f, so that e >= t_k(n) - f is certified.
inline ConstructionArtifact qary_within_budget(int n, int k, std::int64_t f) {
  detail::require_budget(n, k, f);
  std::int64_t last_deficiency = -1;
  for (std::int64_t g = f; g >= 1; --g) {
    ConstructionArtifact art;
    try {
      art = detail::qary_build(n, k, g);
    } catch (const ConstructionError&) {
      continue;
    }
    const std::int64_t d = turan_edge_count(n, k) - static_cast<std::int64_t>(art.graph.edge_count());
    last_deficiency = d;
    if (d > f) continue;
    art.params["f"] = f;
    art.claimed_deficiency = f;
    return detail::finish(std::move(art));
  }
  throw ConstructionError("no q-ary scale fits the deficiency budget", last_deficiency);
}

// Names used by the sweep families.
inline ConstructionArtifact construction_counter1(int n, int k, std::int64_t f) { return clique_free_blowup(n, k, f); }
inline ConstructionArtifact construction_propcount1(int n, int k, int layers, std::int64_t f) {
  return layered_blowup(n, k, layers, f);
}
inline ConstructionArtifact construction_qary(int n, int k, std::int64_t f) { return qary_rewired_blowup(n, k, f); }

}  // namespace xstab
