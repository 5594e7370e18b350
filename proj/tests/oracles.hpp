#pragma once

// Brute-force reference implementations used to check the library.
// Everything here enumerates directly and shares no search code with it.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xstab/graph.hpp"

namespace oracle {

using xstab::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Calls fn on every vector in {0..k-1}^n; stops when fn returns true.
template <class Fn>
bool for_each_assignment(int n, int k, Fn&& fn) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (;;) {
    if (fn(a)) return true;
    int i = 0;
    while (i < n && ++a[static_cast<std::size_t>(i)] == k) a[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

inline bool colourable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  if (k == 0) return false;
  const auto edges = g.edges();
  return for_each_assignment(g.order(), k, [&](const std::vector<int>& a) {
    for (const auto& e : edges)
      if (a[static_cast<std::size_t>(e.u)] == a[static_cast<std::size_t>(e.v)]) return false;
    return true;
  });
}

inline int chromatic(const Graph& g) {
  if (g.order() == 0) return 0;
  int k = 1;
  while (!colourable(g, k)) ++k;
  return k;
}

inline int clique(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) vs.push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i < vs.size() && ok; ++i)
      for (std::size_t j = i + 1; j < vs.size() && ok; ++j) ok = g.adjacent(vs[i], vs[j]);
    if (ok) best = std::max(best, static_cast<int>(vs.size()));
  }
  return best;
}

// Some injection V(pattern) -> V(host) maps every pattern edge to a host
// edge; with through_u >= 0 some pattern edge must land on {through_u, through_v}.
inline bool contains(const Graph& host, const Graph& pattern, int through_u = -1, int through_v = -1) {
  const int p = pattern.order();
  const int n = host.order();
  if (p > n) return false;
  const auto edges = pattern.edges();
  // Every p-subset in every order.
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::fill(chosen.begin(), chosen.begin() + p, true);
  do {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (chosen[static_cast<std::size_t>(i)]) sub.push_back(i);
    do {
      bool ok = true;
      bool hit = through_u < 0;
      for (const auto& e : edges) {
        const int x = sub[static_cast<std::size_t>(e.u)];
        const int y = sub[static_cast<std::size_t>(e.v)];
        if (!host.adjacent(x, y)) {
          ok = false;
          break;
        }
        if ((x == through_u && y == through_v) || (x == through_v && y == through_u)) hit = true;
      }
      if (ok && hit) return true;
    } while (std::next_permutation(sub.begin(), sub.end()));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return false;
}

// Some map V(pattern) -> V(target) preserves edges with fibre sizes <= caps.
inline bool hom(const Graph& pattern, const Graph& target, const std::vector<int>& caps) {
  const auto edges = pattern.edges();
  return for_each_assignment(pattern.order(), target.order(), [&](const std::vector<int>& a) {
    std::vector<int> load(static_cast<std::size_t>(target.order()), 0);
    for (int x : a)
      if (++load[static_cast<std::size_t>(x)] > caps[static_cast<std::size_t>(x)]) return false;
    for (const auto& e : edges)
      if (!target.adjacent(a[static_cast<std::size_t>(e.u)], a[static_cast<std::size_t>(e.v)])) return false;
    return true;
  });
}

inline std::int64_t min_deletions(const Graph& g, int k) {
  std::int64_t best = static_cast<std::int64_t>(g.edge_count());
  const auto edges = g.edges();
  for_each_assignment(g.order(), k, [&](const std::vector<int>& a) {
    std::int64_t c = 0;
    for (const auto& e : edges) c += a[static_cast<std::size_t>(e.u)] == a[static_cast<std::size_t>(e.v)];
    best = std::min(best, c);
    return false;
  });
  return best;
}

// Minimum (internal edges + missing cross pairs) over partitions whose class
// sizes are the Turán sizes, first n mod k classes larger.
inline std::int64_t edit_distance(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> want(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) ++want[static_cast<std::size_t>(i)];
  std::int64_t best = -1;
  for_each_assignment(n, k, [&](const std::vector<int>& a) {
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    for (int x : a) ++size[static_cast<std::size_t>(x)];
    if (size != want) return false;
    std::int64_t c = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        c += g.adjacent(u, v) == (a[static_cast<std::size_t>(u)] == a[static_cast<std::size_t>(v)]);
    if (best < 0 || c < best) best = c;
    return false;
  });
  return best;
}

// graph6 written from the format description: N(n) then x(i,j) for
// 0 <= i < j < n in order of j then i, padded to a multiple of six.
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t b = 0; b < 6; ++b) v = v * 2 + bits[i + b];
    out += static_cast<char>(v + 63);
  }
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  for (int i = 0; i < a.order(); ++i) perm[static_cast<std::size_t>(i)] = i;
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (const auto& e : edges)
      if (!b.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
