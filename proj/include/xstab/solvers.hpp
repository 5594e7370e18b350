#pragma once

// Exact and heuristic k-partition solvers: minimum deletions to k-partite,
// edit distance to T_k(n) on the same vertex set, the exhaustive oracle, and
// the T_k(kt)-free maximisation inside T_k(kn).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "xstab/constructions.hpp"
#include "xstab/errors.hpp"
#include "xstab/graph.hpp"
#include "xstab/limits.hpp"
#include "xstab/search.hpp"

namespace xstab {

struct KPartition {
  int k = 0;
  // Class index 0..k-1 per vertex.
  std::vector<int> assignment;

  std::vector<int> class_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int c : assignment) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
  }

  std::vector<Edge> internal_edge_list(const Graph& g) const {
    std::vector<Edge> out;
    for (const auto& e : g.edges())
      if (assignment[static_cast<std::size_t>(e.u)] == assignment[static_cast<std::size_t>(e.v)]) out.push_back(e);
    return out;
  }

  std::vector<Edge> missing_cross_list(const Graph& g) const {
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v)
        if (!g.adjacent(u, v) && assignment[static_cast<std::size_t>(u)] != assignment[static_cast<std::size_t>(v)])
          out.emplace_back(u, v);
    return out;
  }

  std::int64_t internal_edges(const Graph& g) const {
    return static_cast<std::int64_t>(internal_edge_list(g).size());
  }
  std::int64_t missing_cross(const Graph& g) const {
    return static_cast<std::int64_t>(missing_cross_list(g).size());
  }
};

struct DeletionCertificate {
  KPartition partition;
  std::vector<Edge> deleted;
  std::int64_t count = 0;
};

struct EditCertificate {
  KPartition partition;
  std::vector<Edge> deleted;
  std::vector<Edge> added;
  std::int64_t total = 0;
};

inline DeletionCertificate make_deletion_certificate(const Graph& g, KPartition p) {
  DeletionCertificate cert;
  cert.deleted = p.internal_edge_list(g);
  cert.count = static_cast<std::int64_t>(cert.deleted.size());
  cert.partition = std::move(p);
  return cert;
}

inline EditCertificate make_edit_certificate(const Graph& g, KPartition p) {
  EditCertificate cert;
  cert.deleted = p.internal_edge_list(g);
  cert.added = p.missing_cross_list(g);
  cert.total = static_cast<std::int64_t>(cert.deleted.size() + cert.added.size());
  cert.partition = std::move(p);
  return cert;
}

/// Removing the deleted edges leaves no edge inside a class, and the deleted
/// list is exactly the set of internal edges.
inline bool certificate_is_sound(const Graph& g, const DeletionCertificate& cert) {
  if (static_cast<int>(cert.partition.assignment.size()) != g.order()) return false;
  for (int c : cert.partition.assignment)
    if (c < 0 || c >= cert.partition.k) return false;
  Graph h = g;
  for (const auto& e : cert.deleted) {
    if (!g.adjacent(e.u, e.v)) return false;
    h.remove_edge(e.u, e.v);
  }
  return cert.partition.internal_edges(h) == 0 &&
         cert.deleted == cert.partition.internal_edge_list(g) &&
         cert.count == static_cast<std::int64_t>(cert.deleted.size());
}

inline bool certificate_is_sound(const Graph& g, const EditCertificate& cert) {
  if (static_cast<int>(cert.partition.assignment.size()) != g.order()) return false;
  if (cert.partition.class_sizes() != turan_part_sizes(g.order(), cert.partition.k)) return false;
  Graph h = g;
  for (const auto& e : cert.deleted) h.remove_edge(e.u, e.v);
  for (const auto& e : cert.added) h.add_edge(e.u, e.v);
  // h must be the complete k-partite graph of the partition.
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (h.adjacent(u, v) != (cert.partition.assignment[static_cast<std::size_t>(u)] !=
                               cert.partition.assignment[static_cast<std::size_t>(v)]))
        return false;
  return cert.total == static_cast<std::int64_t>(cert.deleted.size() + cert.added.size());
}

namespace detail {

enum class Objective { Deletion, Edit };

struct PartitionSolution {
  std::int64_t cost = 0;
  std::vector<int> assignment;
};

// Branch and bound over twin classes. Free vertices with identical open
// neighbourhoods form one unit (twins are never adjacent). For deletions a
// unit can be placed whole in one class without loss; for edits the search
// enumerates how many members go to each class under the class sizes.
// With class sizes fixed, edits = 2 * internal edges + (cross pairs - e(g)),
// so both objectives search on internal edges. Pinned vertices have a fixed
// class.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, int k, Objective obj, std::span<const int> pins, std::span<const int> targets)
      : g_(g), n_(g.order()), k_(k), obj_(obj), pins_(pins.begin(), pins.end()) {
    if (pins_.empty()) pins_.assign(static_cast<std::size_t>(n_), -1);

    std::map<VertexSet, int> index;
    for (int v = 0; v < n_; ++v) {
      if (pins_[static_cast<std::size_t>(v)] >= 0) continue;
      auto [it, fresh] = index.try_emplace(g.neighbors(v), static_cast<int>(members_.size()));
      if (fresh) members_.emplace_back();
      members_[static_cast<std::size_t>(it->second)].push_back(v);
    }
    units_ = static_cast<int>(members_.size());

    weight_.resize(static_cast<std::size_t>(units_));
    for (int u = 0; u < units_; ++u) weight_[static_cast<std::size_t>(u)] = static_cast<std::int64_t>(members_[static_cast<std::size_t>(u)].size());

    used_.assign(static_cast<std::size_t>(k_), 0);
    if (obj_ == Objective::Edit) {
      cap_.assign(targets.begin(), targets.end());
      if (static_cast<int>(cap_.size()) != k_) throw InvalidParameter("need one target size per class");
      std::int64_t placed = 0;
      for (int t : cap_) {
        offset_ += placed * t;
        placed += t;
      }
      offset_ -= static_cast<std::int64_t>(g.edge_count());
    }
    for (int v = 0; v < n_; ++v) {
      const int p = pins_[static_cast<std::size_t>(v)];
      if (p < 0) continue;
      used_[static_cast<std::size_t>(p)] = 1;
      if (obj_ == Objective::Edit && --cap_[static_cast<std::size_t>(p)] < 0) infeasible_ = true;
    }

    // Per-member cost of placing a unit in each class, from pinned vertices.
    coef_.assign(static_cast<std::size_t>(units_ * k_), 0);
    for (int u = 0; u < units_; ++u) {
      const int rep = members_[static_cast<std::size_t>(u)].front();
      for (int w = 0; w < n_; ++w) {
        const int p = pins_[static_cast<std::size_t>(w)];
        if (p < 0) continue;
        if (g.adjacent(rep, w)) coef(u, p) += 1;
      }
    }
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        const int pa = pins_[static_cast<std::size_t>(a)];
        const int pb = pins_[static_cast<std::size_t>(b)];
        if (pa < 0 || pb < 0) continue;
        if (g.adjacent(a, b) && pa == pb) ++constant_;
      }

    // Nonincreasing degree, then vertex index.
    order_.resize(static_cast<std::size_t>(units_));
    for (int u = 0; u < units_; ++u) order_[static_cast<std::size_t>(u)] = u;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.degree(members_[static_cast<std::size_t>(a)].front()) > g.degree(members_[static_cast<std::size_t>(b)].front());
    });
    unit_adj_.assign(static_cast<std::size_t>(units_ * units_), 0);
    for (int a = 0; a < units_; ++a)
      for (int b = 0; b < units_; ++b)
        unit_adj_[static_cast<std::size_t>(a * units_ + b)] =
            g.adjacent(members_[static_cast<std::size_t>(a)].front(), members_[static_cast<std::size_t>(b)].front());
    comp_.assign(static_cast<std::size_t>(units_ * k_), 0);
  }

  int unit_count() const { return units_; }

  // Cheapest completion with cost < bound.
  std::optional<PartitionSolution> minimise(std::int64_t bound) {
    limit_ = internal_limit(bound);
    stop_at_first_ = false;
    return run();
  }

  // Any completion with cost <= target.
  std::optional<PartitionSolution> feasible(std::int64_t target) {
    limit_ = internal_limit(target + 1);
    stop_at_first_ = true;
    return run();
  }

 private:
  std::int64_t& coef(int u, int p) { return coef_[static_cast<std::size_t>(u * k_ + p)]; }
  bool adj(int a, int b) const { return unit_adj_[static_cast<std::size_t>(a * units_ + b)] != 0; }

  // Internal-edge count I with objective(I) < bound iff I < result.
  std::int64_t internal_limit(std::int64_t bound) const {
    if (obj_ == Objective::Deletion || bound == std::numeric_limits<std::int64_t>::max()) return bound;
    const std::int64_t room = bound - offset_;
    if (room <= 0) return 0;
    return (room + 1) / 2;
  }
  std::int64_t objective(std::int64_t internal) const {
    return obj_ == Objective::Deletion ? internal : 2 * internal + offset_;
  }

  std::optional<PartitionSolution> run() {
    best_.reset();
    done_ = false;
    if (infeasible_) return std::nullopt;
    expand(0, constant_);
    return best_;
  }

  // Each remaining unit at its cheapest placement given the current
  // coefficients; for edits the unit fills the cheapest classes up to their
  // remaining sizes.
  std::int64_t lower_bound(std::size_t depth, std::int64_t cost) {
    std::vector<int> by_cost(static_cast<std::size_t>(k_));
    for (std::size_t d = depth; d < order_.size(); ++d) {
      const int u = order_[d];
      if (obj_ == Objective::Deletion) {
        std::int64_t m = std::numeric_limits<std::int64_t>::max();
        for (int p = 0; p < k_; ++p) m = std::min(m, coef(u, p));
        cost += m * weight_[static_cast<std::size_t>(u)];
        continue;
      }
      for (int p = 0; p < k_; ++p) by_cost[static_cast<std::size_t>(p)] = p;
      std::sort(by_cost.begin(), by_cost.end(), [&](int a, int b) { return coef(u, a) < coef(u, b); });
      std::int64_t left = weight_[static_cast<std::size_t>(u)];
      for (int p : by_cost) {
        const std::int64_t take = std::min<std::int64_t>(left, std::max(0, cap_[static_cast<std::size_t>(p)]));
        cost += take * coef(u, p);
        left -= take;
      }
      if (left > 0) return std::numeric_limits<std::int64_t>::max();
    }
    return cost;
  }

  struct Option {
    std::int64_t delta;
    std::vector<int> counts;
  };

  void compositions(int u, int p, int left, std::vector<int>& cur, std::vector<Option>& out) {
    if (p == k_ - 1) {
      if (left > cap_[static_cast<std::size_t>(p)]) return;
      cur[static_cast<std::size_t>(p)] = left;
      if (!symmetric_ok(cur)) return;
      std::int64_t delta = 0;
      for (int q = 0; q < k_; ++q) delta += cur[static_cast<std::size_t>(q)] * coef(u, q);
      out.push_back({delta, cur});
      return;
    }
    const int hi = std::min(left, cap_[static_cast<std::size_t>(p)]);
    for (int x = 0; x <= hi; ++x) {
      cur[static_cast<std::size_t>(p)] = x;
      compositions(u, p + 1, left - x, cur, out);
    }
  }

  // Unused classes with equal remaining capacity are interchangeable; keep
  // only count vectors that are nonincreasing across each such group.
  bool symmetric_ok(const std::vector<int>& cur) const {
    for (int p = 0; p < k_; ++p) {
      if (used_[static_cast<std::size_t>(p)]) continue;
      for (int q = p + 1; q < k_; ++q) {
        if (used_[static_cast<std::size_t>(q)] || cap_[static_cast<std::size_t>(q)] != cap_[static_cast<std::size_t>(p)]) continue;
        if (cur[static_cast<std::size_t>(q)] > cur[static_cast<std::size_t>(p)]) return false;
        break;
      }
    }
    return true;
  }

  std::vector<Option> options(int u) {
    std::vector<Option> out;
    const std::int64_t w = weight_[static_cast<std::size_t>(u)];
    if (obj_ == Objective::Deletion) {
      bool fresh_taken = false;
      for (int p = 0; p < k_; ++p) {
        if (!used_[static_cast<std::size_t>(p)]) {
          if (fresh_taken) continue;
          fresh_taken = true;
        }
        std::vector<int> counts(static_cast<std::size_t>(k_), 0);
        counts[static_cast<std::size_t>(p)] = static_cast<int>(w);
        out.push_back({w * coef(u, p), std::move(counts)});
      }
    } else {
      std::vector<int> cur(static_cast<std::size_t>(k_), 0);
      compositions(u, 0, static_cast<int>(w), cur, out);
    }
    std::stable_sort(out.begin(), out.end(), [](const Option& a, const Option& b) { return a.delta < b.delta; });
    return out;
  }

  void apply(std::size_t depth, const std::vector<int>& counts, int sign) {
    const int u = order_[depth];
    for (std::size_t d = depth + 1; d < order_.size(); ++d) {
      const int v = order_[d];
      if (!adj(u, v)) continue;
      for (int p = 0; p < k_; ++p) coef(v, p) += sign * counts[static_cast<std::size_t>(p)];
    }
  }

  void expand(std::size_t depth, std::int64_t cost) {
    if (done_) return;
    if (lower_bound(depth, cost) >= limit_) return;
    if (depth == order_.size()) {
      record(cost);
      return;
    }
    const int u = order_[depth];
    for (const auto& opt : options(u)) {
      if (cost + opt.delta >= limit_) continue;
      std::vector<char> saved_used = used_;
      for (int p = 0; p < k_; ++p) {
        const int c = opt.counts[static_cast<std::size_t>(p)];
        comp_[static_cast<std::size_t>(u * k_ + p)] = c;
        if (c > 0) used_[static_cast<std::size_t>(p)] = 1;
        if (obj_ == Objective::Edit) cap_[static_cast<std::size_t>(p)] -= c;
      }
      apply(depth, opt.counts, +1);
      expand(depth + 1, cost + opt.delta);
      apply(depth, opt.counts, -1);
      if (obj_ == Objective::Edit)
        for (int p = 0; p < k_; ++p) cap_[static_cast<std::size_t>(p)] += opt.counts[static_cast<std::size_t>(p)];
      used_ = std::move(saved_used);
      if (done_) return;
    }
  }

  void record(std::int64_t cost) {
    PartitionSolution sol;
    sol.cost = objective(cost);
    sol.assignment = pins_;
    for (int u = 0; u < units_; ++u) {
      auto it = members_[static_cast<std::size_t>(u)].begin();
      for (int p = 0; p < k_; ++p)
        for (int c = 0; c < comp_[static_cast<std::size_t>(u * k_ + p)]; ++c) sol.assignment[static_cast<std::size_t>(*it++)] = p;
    }
    best_ = std::move(sol);
    limit_ = cost;
    if (stop_at_first_) done_ = true;
  }

  const Graph& g_;
  int n_;
  int k_;
  Objective obj_;
  std::vector<int> pins_;
  std::vector<std::vector<int>> members_;
  int units_ = 0;
  std::vector<std::int64_t> weight_;
  std::vector<char> unit_adj_;
  std::vector<std::int64_t> coef_;
  std::vector<int> cap_;
  std::vector<char> used_;
  std::vector<int> order_;
  std::vector<int> comp_;
  std::int64_t constant_ = 0;
  std::int64_t offset_ = 0;
  bool infeasible_ = false;

  std::int64_t limit_ = 0;
  bool stop_at_first_ = false;
  bool done_ = false;
  std::optional<PartitionSolution> best_;
};

// Lexicographically smallest optimal assignment: fix vertices in index order
// to the smallest class that still admits a completion of cost `optimum`.
inline std::vector<int> lexicographic_optimum(const Graph& g, int k, Objective obj, std::span<const int> targets,
                                              std::int64_t optimum, std::vector<int> witness) {
  std::vector<int> pins(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    int chosen = witness[static_cast<std::size_t>(v)];
    for (int c = 0; c < chosen; ++c) {
      pins[static_cast<std::size_t>(v)] = c;
      PartitionSearch search(g, k, obj, pins, targets);
      if (auto sol = search.feasible(optimum)) {
        witness = std::move(sol->assignment);
        chosen = c;
        break;
      }
    }
    pins[static_cast<std::size_t>(v)] = chosen;
  }
  return witness;
}

inline void check_exact_capacity(const Graph& g, int k, int units, const Limits& limits) {
  if (g.order() > limits.max_order)
    throw CapacityError("graph order " + std::to_string(g.order()) + " exceeds the configured maximum " +
                        std::to_string(limits.max_order));
  if (units > limits.exact_units(k))
    throw CapacityError("exact solver capacity exceeded: " + std::to_string(units) + " twin classes > " +
                        std::to_string(limits.exact_units(k)) + "; use the heuristic for an upper bound");
}

inline std::vector<std::uint64_t> single_word_rows(const Graph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v).words()[0];
  return rows;
}

}  // namespace detail

// ---------------------------------------------------------------------------

struct HeuristicOptions {
  int starts = 32;
};

/// Multi-start local search: each start is a random balanced partition,
/// improved by steepest single-vertex moves until no move helps.
/// Deterministic for a given seed; the count is an upper bound.
inline DeletionCertificate min_deletions_heuristic(const Graph& g, int k, std::uint64_t seed,
                                                   HeuristicOptions opts = {}) {
  if (k < 1) throw InvalidParameter("class count k must be at least 1");
  const int n = g.order();
  std::mt19937_64 rng(seed);
  std::vector<int> best;
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<int> assign(static_cast<std::size_t>(n));
  std::vector<int> cnt(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  auto at = [&](int v, int p) -> int& { return cnt[static_cast<std::size_t>(v) * static_cast<std::size_t>(k) + static_cast<std::size_t>(p)]; };

  for (int s = 0; s < std::max(1, opts.starts); ++s) {
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
    for (int i = 0; i < n; ++i) assign[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i % k;

    std::fill(cnt.begin(), cnt.end(), 0);
    for (int v = 0; v < n; ++v) g.neighbors(v).for_each([&](int w) { ++at(v, assign[static_cast<std::size_t>(w)]); });

    for (;;) {
      int bv = -1, bp = -1, gain = 0;
      for (int v = 0; v < n; ++v) {
        const int cur = assign[static_cast<std::size_t>(v)];
        for (int p = 0; p < k; ++p) {
          const int gp = at(v, cur) - at(v, p);
          if (gp > gain) {
            gain = gp;
            bv = v;
            bp = p;
          }
        }
      }
      if (bv < 0) break;
      const int from = assign[static_cast<std::size_t>(bv)];
      assign[static_cast<std::size_t>(bv)] = bp;
      g.neighbors(bv).for_each([&](int w) {
        --at(w, from);
        ++at(w, bp);
      });
    }

    std::int64_t cost = 0;
    for (int v = 0; v < n; ++v) cost += at(v, assign[static_cast<std::size_t>(v)]);
    cost /= 2;
    if (cost < best_cost || (cost == best_cost && assign < best)) {
      best_cost = cost;
      best = assign;
    }
  }
  return make_deletion_certificate(g, KPartition{k, best});
}

/// Exhaustive minimum internal-edge count over all k^n assignments.
inline std::int64_t naive_min_deletions_oracle(const Graph& g, int k, const Limits& limits = {}) {
  if (k < 1) throw InvalidParameter("class count k must be at least 1");
  const int n = g.order();
  if (k == 1 || n == 0) return static_cast<std::int64_t>(g.edge_count());
  double states = 1;
  for (int i = 0; i < n; ++i) states *= k;
  if (n > 64 || states > static_cast<double>(limits.oracle_budget))
    throw CapacityError("oracle budget exceeded: " + std::to_string(k) + "^" + std::to_string(n) + " assignments");

  const auto rows = detail::single_word_rows(g);
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(k), 0);
  mask[0] = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  std::int64_t cost = static_cast<std::int64_t>(g.edge_count());
  std::int64_t best = cost;
  for (;;) {
    int i = 0;
    for (; i < n; ++i) {
      const int from = digit[static_cast<std::size_t>(i)];
      const int to = (from + 1) % k;
      const std::uint64_t bit = std::uint64_t{1} << i;
      mask[static_cast<std::size_t>(from)] &= ~bit;
      cost -= std::popcount(rows[static_cast<std::size_t>(i)] & mask[static_cast<std::size_t>(from)]);
      cost += std::popcount(rows[static_cast<std::size_t>(i)] & mask[static_cast<std::size_t>(to)]);
      mask[static_cast<std::size_t>(to)] |= bit;
      digit[static_cast<std::size_t>(i)] = to;
      if (to != 0) break;
    }
    if (i == n) break;
    best = std::min(best, cost);
  }
  return best;
}

/// Exact minimum number of internal edges over all k-partitions (the number
/// of deletions needed to make g k-partite). Ties are broken by the
/// lexicographically smallest assignment.
inline DeletionCertificate min_deletions_to_k_partite_exact(const Graph& g, int k, const Limits& limits = {}) {
  if (k < 1) throw InvalidParameter("class count k must be at least 1");
  detail::PartitionSearch root(g, k, detail::Objective::Deletion, {}, {});
  detail::check_exact_capacity(g, k, root.unit_count(), limits);

  auto incumbent = min_deletions_heuristic(g, k, 0x5eedULL, HeuristicOptions{8});
  std::int64_t optimum = incumbent.count;
  std::vector<int> witness = incumbent.partition.assignment;
  if (auto better = root.minimise(optimum)) {
    optimum = better->cost;
    witness = std::move(better->assignment);
  }
  auto assignment = detail::lexicographic_optimum(g, k, detail::Objective::Deletion, {}, optimum, std::move(witness));
  return make_deletion_certificate(g, KPartition{k, std::move(assignment)});
}

/// Optimal value only; skips the lexicographic certificate extraction.
inline std::int64_t min_deletions_value(const Graph& g, int k, const Limits& limits = {}) {
  if (k < 1) throw InvalidParameter("class count k must be at least 1");
  detail::PartitionSearch root(g, k, detail::Objective::Deletion, {}, {});
  detail::check_exact_capacity(g, k, root.unit_count(), limits);
  const std::int64_t incumbent = min_deletions_heuristic(g, k, 0x5eedULL, HeuristicOptions{4}).count;
  if (auto better = root.minimise(incumbent)) return better->cost;
  return incumbent;
}

/// Minimum additions plus deletions turning g into a copy of T_k(n) on its
/// own vertex set: internal edges plus missing cross pairs over partitions
/// with Turán class sizes.
inline EditCertificate edit_distance_to_turan(const Graph& g, int k, const Limits& limits = {}) {
  if (k < 1) throw InvalidParameter("class count k must be at least 1");
  const auto targets = turan_part_sizes(g.order(), k);
  detail::PartitionSearch root(g, k, detail::Objective::Edit, {}, targets);
  detail::check_exact_capacity(g, k, root.unit_count(), limits);
  auto best = root.minimise(std::numeric_limits<std::int64_t>::max());
  if (!best) throw Error("edit distance search found no balanced partition");
  auto assignment =
      detail::lexicographic_optimum(g, k, detail::Objective::Edit, targets, best->cost, std::move(best->assignment));
  return make_edit_certificate(g, KPartition{k, std::move(assignment)});
}

/// Maximum edge count of a spanning subgraph of T_k(kn) containing no copy
/// of T_k(kt), by exhaustive include/exclude search over the edges.
inline std::int64_t max_tkt_free_subgraph(int n, int k, int t, const Limits& limits = {}) {
  if (n < 1 || k < 1 || t < 1) throw InvalidParameter("n, k and t must be positive");
  if (k * n > limits.tkt_host_order)
    throw CapacityError("host T_k(kn) has " + std::to_string(k * n) + " vertices, limit " +
                        std::to_string(limits.tkt_host_order));
  const Graph host = turan_graph(k * n, k).graph;
  if (t > n) return static_cast<std::int64_t>(host.edge_count());
  const Graph pattern = turan_graph(k * t, k).graph;
  const auto edges = host.edges();
  const ThroughEdgeTester tester(pattern);

  Graph cur(host.order());
  std::int64_t best = 0;
  auto dfs = [&](auto&& self, std::size_t i, std::int64_t count) -> void {
    if (count + static_cast<std::int64_t>(edges.size() - i) <= best) return;
    if (i == edges.size()) {
      best = count;
      return;
    }
    const Edge e = edges[i];
    cur.add_edge(e.u, e.v);
    if (!tester.find(cur, e)) self(self, i + 1, count + 1);
    cur.remove_edge(e.u, e.v);
    self(self, i + 1, count);
  };
  dfs(dfs, 0, 0);
  return best;
}

}  // namespace xstab
