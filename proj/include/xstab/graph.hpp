#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "xstab/errors.hpp"

namespace xstab {

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  // Stored with u < v.
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bit row over 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(int v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(int v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  // Lowest member, or -1.
  int first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        w &= w - 1;
        fn(static_cast<int>(i * 64) + b);
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  int intersection_count(const VertexSet& o) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.words_ <=> b.words_;
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected simple graph on vertices 0..n-1 with one bit row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)) {
    if (n < 0) throw InvalidParameter("graph order must be nonnegative");
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(int u, int v) const noexcept { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const noexcept { return rows_[static_cast<std::size_t>(v)].count(); }

  // No-ops on loops and existing edges.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || adjacent(u, v)) return;
    rows_[static_cast<std::size_t>(u)].insert(v);
    rows_[static_cast<std::size_t>(v)].insert(u);
    ++m_;
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adjacent(u, v)) return;
    rows_[static_cast<std::size_t>(u)].erase(v);
    rows_[static_cast<std::size_t>(v)].erase(u);
    --m_;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      rows_[static_cast<std::size_t>(u)].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
  }

  Graph without_edge(Edge e) const {
    Graph g = *this;
    g.remove_edge(e.u, e.v);
    return g;
  }

  // Subgraph induced by `keep`, relabeled in ascending order.
  Graph induced(std::span<const int> keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }
  Graph induced(const VertexSet& keep) const {
    auto m = keep.members();
    return induced(std::span<const int>(m));
  }

  // Vertex v of this graph becomes perm[v].
  Graph relabeled(std::span<const int> perm) const {
    Graph g(n_);
    for (const auto& e : edges()) g.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return g;
  }

  Graph complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InvalidParameter("vertex out of range");
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> rows_;
};

// Common small graphs.
inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace xstab
