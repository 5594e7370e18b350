#pragma once

// Search primitives on Graph: Turán counts, colouring, cliques, subgraph
// containment, capacity-bounded homomorphisms and degree diagnostics.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "xstab/errors.hpp"
#include "xstab/graph.hpp"

namespace xstab {

/// Part sizes of T_k(n); the first n mod k parts are the larger ones.
inline std::vector<int> turan_part_sizes(int n, int k) {
  if (k < 1) throw InvalidParameter("class count k must be at least 1");
  if (n < 0) throw InvalidParameter("vertex count must be nonnegative");
  std::vector<int> sizes(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

inline std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

inline std::int64_t turan_edge_count(int n, int k) {
  std::int64_t e = choose2(n);
  for (int s : turan_part_sizes(n, k)) e -= choose2(s);
  return e;
}

/// Vertices v with d(v) < (1 - delta) n (k-1) / k.
inline VertexSet low_degree_set(const Graph& g, int k, double delta) {
  if (k < 2) throw InvalidParameter("low_degree_set needs k >= 2");
  const double threshold = (1.0 - delta) * g.order() * (k - 1) / k;
  VertexSet out(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < threshold) out.insert(v);
  return out;
}

// ---------------------------------------------------------------------------
// Colouring

namespace detail {

// DSATUR backtracking for a proper colouring with at most k colours.
class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, int k)
      : g_(g), k_(k), n_(g.order()),
        colour_(static_cast<std::size_t>(n_), -1),
        count_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(k, 1)), 0),
        sat_(static_cast<std::size_t>(n_), 0),
        degree_(g.degrees()) {}

  std::optional<std::vector<int>> run() {
    if (n_ == 0) return colour_;
    if (k_ <= 0) return std::nullopt;
    if (expand(0, 0)) return colour_;
    return std::nullopt;
  }

 private:
  int& cnt(int v, int c) { return count_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]; }

  int select() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0 || sat_[static_cast<std::size_t>(v)] > sat_[static_cast<std::size_t>(best)] ||
          (sat_[static_cast<std::size_t>(v)] == sat_[static_cast<std::size_t>(best)] &&
           degree_[static_cast<std::size_t>(v)] > degree_[static_cast<std::size_t>(best)]))
        best = v;
    }
    return best;
  }

  bool expand(int coloured, int used) {
    if (coloured == n_) return true;
    const int v = select();
    if (sat_[static_cast<std::size_t>(v)] >= k_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (cnt(v, c) != 0) continue;
      colour_[static_cast<std::size_t>(v)] = c;
      bool dead = false;
      g_.neighbors(v).for_each([&](int u) {
        if (colour_[static_cast<std::size_t>(u)] >= 0) return;
        if (cnt(u, c)++ == 0 && ++sat_[static_cast<std::size_t>(u)] >= k_) dead = true;
      });
      if (!dead && expand(coloured + 1, std::max(used, c + 1))) return true;
      g_.neighbors(v).for_each([&](int u) {
        if (colour_[static_cast<std::size_t>(u)] >= 0) return;
        if (--cnt(u, c) == 0) --sat_[static_cast<std::size_t>(u)];
      });
      colour_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> count_;
  std::vector<int> sat_;
  std::vector<int> degree_;
};

inline void clique_expand(const Graph& g, VertexSet candidates, int size, int& best) {
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  while (!candidates.empty()) {
    if (size + candidates.count() <= best) return;
    const int v = candidates.first();
    clique_expand(g, candidates & g.neighbors(v), size + 1, best);
    candidates.erase(v);
  }
}

}  // namespace detail

/// A proper colouring with colours 0..k-1, if one exists.
inline std::optional<std::vector<int>> k_colouring(const Graph& g, int k) {
  return detail::ColouringSearch(g, k).run();
}

inline bool is_k_colourable(const Graph& g, int k) { return k_colouring(g, k).has_value(); }

inline int clique_number(const Graph& g) {
  int best = 0;
  detail::clique_expand(g, VertexSet::full(g.order()), 0, best);
  return best;
}

/// Exact chromatic number: clique lower bound, then DSATUR k-colourability
/// for increasing k. Returns 0 for the empty graph.
inline int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = std::max(1, clique_number(g));; ++k)
    if (is_k_colourable(g, k)) return k;
}

// ---------------------------------------------------------------------------
// Mappings

/// Pattern vertex p is mapped to host vertex map[p].
struct EmbeddingWitness {
  std::vector<int> map;
};

namespace detail {

// Edge-preserving map from pattern into target with at most caps[t] pattern
// vertices on target vertex t. With all capacities 1 it is an injective
// subgraph embedding, and degree/neighbourhood-size pruning applies.
class MappingSearch {
 public:
  MappingSearch(const Graph& pattern, const Graph& target, std::vector<int> caps)
      : pattern_(pattern), target_(target), remaining_(std::move(caps)),
        injective_(std::all_of(remaining_.begin(), remaining_.end(), [](int c) { return c <= 1; })),
        map_(static_cast<std::size_t>(pattern.order()), -1),
        available_(target.order()) {
    for (int t = 0; t < target_.order(); ++t)
      if (remaining_[static_cast<std::size_t>(t)] > 0) available_.insert(t);
    if (injective_ && target_.order() >= 16) index_twins();
  }

  // Fixes pattern vertex p onto target t before the search runs.
  bool pin(int p, int t) {
    if (map_[static_cast<std::size_t>(p)] >= 0 || remaining_[static_cast<std::size_t>(t)] <= 0) return false;
    for (int q : pinned_)
      if (pattern_.adjacent(p, q) && !target_.adjacent(t, map_[static_cast<std::size_t>(q)])) return false;
    assign(p, t);
    pinned_.push_back(p);
    return true;
  }

  std::optional<std::vector<int>> run() {
    build_order();
    scratch_.assign(order_.size() + 1, VertexSet(target_.order()));
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  // Unused target vertices with equal open neighbourhoods are
  // interchangeable for an injective map: only the lowest is tried.
  void index_twins() {
    std::map<VertexSet, int> ids;
    twin_.resize(static_cast<std::size_t>(target_.order()));
    for (int t = 0; t < target_.order(); ++t) {
      auto [it, fresh] = ids.try_emplace(target_.neighbors(t), static_cast<int>(twin_sets_.size()));
      if (fresh) twin_sets_.emplace_back(target_.order());
      twin_sets_[static_cast<std::size_t>(it->second)].insert(t);
      twin_[static_cast<std::size_t>(t)] = it->second;
    }
  }

  bool shadowed(int t) const {
    const auto& mates = twin_sets_[static_cast<std::size_t>(twin_[static_cast<std::size_t>(t)])];
    return (mates & available_).first() < t;
  }

  void assign(int p, int t) {
    map_[static_cast<std::size_t>(p)] = t;
    if (--remaining_[static_cast<std::size_t>(t)] == 0) available_.erase(t);
  }
  void unassign(int p) {
    const int t = map_[static_cast<std::size_t>(p)];
    map_[static_cast<std::size_t>(p)] = -1;
    if (remaining_[static_cast<std::size_t>(t)]++ == 0) available_.insert(t);
  }

  // Pinned vertices first; then repeatedly the vertex with the most ordered
  // neighbours, breaking ties by degree.
  void build_order() {
    const int n = pattern_.order();
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> links(static_cast<std::size_t>(n), 0);
    auto place = [&](int v) {
      placed[static_cast<std::size_t>(v)] = 1;
      if (map_[static_cast<std::size_t>(v)] < 0) order_.push_back(v);
      pattern_.neighbors(v).for_each([&](int w) { ++links[static_cast<std::size_t>(w)]; });
    };
    for (int p : pinned_) place(p);
    for (int step = static_cast<int>(pinned_.size()); step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(best)] ||
            (links[static_cast<std::size_t>(v)] == links[static_cast<std::size_t>(best)] &&
             pattern_.degree(v) > pattern_.degree(best)))
          best = v;
      }
      place(best);
    }
    // For each search depth: earlier-mapped neighbours and the number of
    // neighbours still to be mapped after this vertex.
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int p : pinned_) done[static_cast<std::size_t>(p)] = 1;
    earlier_.assign(order_.size(), {});
    later_.assign(order_.size(), 0);
    for (std::size_t d = 0; d < order_.size(); ++d) {
      const int v = order_[d];
      pattern_.neighbors(v).for_each([&](int w) {
        if (done[static_cast<std::size_t>(w)]) earlier_[d].push_back(w);
        else ++later_[d];
      });
      done[static_cast<std::size_t>(v)] = 1;
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    VertexSet& cand = scratch_[depth];
    cand = available_;
    for (int w : earlier_[depth]) cand &= target_.neighbors(map_[static_cast<std::size_t>(w)]);
    const int need_degree = pattern_.degree(v);
    bool found = false;
    cand.for_each([&](int t) {
      if (found) return;
      if (injective_) {
        if (target_.degree(t) < need_degree) return;
        if (!twin_.empty() && shadowed(t)) return;
        if (target_.neighbors(t).intersection_count(available_) < later_[depth]) return;
      }
      assign(v, t);
      if (extend(depth + 1)) {
        found = true;
        return;
      }
      unassign(v);
    });
    return found;
  }

  const Graph& pattern_;
  const Graph& target_;
  std::vector<int> remaining_;
  bool injective_;
  std::vector<int> map_;
  VertexSet available_;
  std::vector<int> pinned_;
  std::vector<int> order_;
  std::vector<std::vector<int>> earlier_;
  std::vector<int> later_;
  std::vector<VertexSet> scratch_;
  std::vector<int> twin_;
  std::vector<VertexSet> twin_sets_;
};

}  // namespace detail

/// Homomorphism pattern -> target placing at most caps[t] pattern vertices
/// on each target vertex t.
inline std::optional<std::vector<int>> hom_with_capacities(const Graph& pattern, const Graph& target,
                                                           std::span<const int> caps) {
  if (static_cast<int>(caps.size()) != target.order())
    throw InvalidParameter("capacity vector must have one entry per target vertex");
  if (std::any_of(caps.begin(), caps.end(), [](int c) { return c < 0; }))
    throw InvalidParameter("capacities must be nonnegative");
  if (std::accumulate(caps.begin(), caps.end(), std::int64_t{0}) < pattern.order()) return std::nullopt;
  return detail::MappingSearch(pattern, target, std::vector<int>(caps.begin(), caps.end())).run();
}

/// A copy of `pattern` inside `host` (not necessarily induced).
inline std::optional<EmbeddingWitness> contains_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return std::nullopt;
  auto map = detail::MappingSearch(pattern, host, std::vector<int>(static_cast<std::size_t>(host.order()), 1)).run();
  if (!map) return std::nullopt;
  return EmbeddingWitness{std::move(*map)};
}

/// Finds copies of a fixed pattern that use a given host edge. Oriented
/// pattern edges are reduced to one representative per automorphism orbit
/// when the tester is built, so repeated queries are cheap.
class ThroughEdgeTester {
 public:
  explicit ThroughEdgeTester(const Graph& pattern) : pattern_(pattern) {
    const std::vector<int> ones(static_cast<std::size_t>(pattern.order()), 1);
    std::vector<std::pair<int, int>> seen;
    for (const auto& pe : pattern.edges()) {
      for (int flip = 0; flip < 2; ++flip) {
        const int a = flip ? pe.v : pe.u;
        const int b = flip ? pe.u : pe.v;
        bool covered = false;
        for (const auto& [x, y] : seen) {
          detail::MappingSearch auto_search(pattern, pattern, ones);
          if (auto_search.pin(x, a) && auto_search.pin(y, b) && auto_search.run()) {
            covered = true;
            break;
          }
        }
        if (!covered) seen.emplace_back(a, b);
      }
    }
    anchors_ = std::move(seen);
  }

  std::optional<EmbeddingWitness> find(const Graph& host, Edge e) const {
    if (pattern_.order() > host.order() || pattern_.edge_count() > host.edge_count()) return std::nullopt;
    if (!host.adjacent(e.u, e.v)) return std::nullopt;
    const std::vector<int> ones(static_cast<std::size_t>(host.order()), 1);
    for (const auto& [a, b] : anchors_) {
      detail::MappingSearch search(pattern_, host, ones);
      if (!search.pin(a, e.u) || !search.pin(b, e.v)) continue;
      if (auto map = search.run()) return EmbeddingWitness{std::move(*map)};
    }
    return std::nullopt;
  }

  std::size_t anchor_count() const { return anchors_.size(); }

 private:
  Graph pattern_;
  std::vector<std::pair<int, int>> anchors_;
};

/// A copy of `pattern` inside `host` that uses the host edge e.
inline std::optional<EmbeddingWitness> contains_subgraph_through(const Graph& host, const Graph& pattern, Edge e) {
  return ThroughEdgeTester(pattern).find(host, e);
}

inline bool is_free_of(const Graph& host, const Graph& pattern) {
  return !contains_subgraph(host, pattern).has_value();
}

/// Isomorphism test by degree-sequence filter then a bijective embedding.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return contains_subgraph(a, b).has_value();
}

}  // namespace xstab
