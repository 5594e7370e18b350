#pragma once

// Near-extremal H-free graphs on few vertices: exhaustive labeled
// enumeration, seeded sampling by edge walks from T_k(n), and the
// verification reports built on them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "xstab/constructions.hpp"
#include "xstab/errors.hpp"
#include "xstab/graph.hpp"
#include "xstab/graph6.hpp"
#include "xstab/limits.hpp"
#include "xstab/search.hpp"
#include "xstab/solvers.hpp"

namespace xstab {

struct EnumerationOptions {
  // Emit one representative per isomorphism class.
  bool dedup = false;
};

namespace detail {

// Isomorphism dedup: graphs are bucketed by (edge count, degree sequence)
// and compared pairwise inside a bucket.
class IsoFilter {
 public:
  bool admit(const Graph& g) {
    auto degs = g.degrees();
    std::sort(degs.begin(), degs.end());
    auto& bucket = buckets_[{static_cast<int>(g.edge_count()), std::move(degs)}];
    for (const auto& rep : bucket)
      if (is_isomorphic(rep, g)) return false;
    bucket.push_back(g);
    return true;
  }

 private:
  std::map<std::pair<int, std::vector<int>>, std::vector<Graph>> buckets_;
};

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

}  // namespace detail

/// Visits every h-free graph on n labeled vertices with
/// e >= t_k(n) - f. Pairs are decided in column order, inclusion first, and
/// an edge is only included if no copy of h runs through it. Returns the
/// number of graphs visited.
template <class Visitor>
std::int64_t enumerate_near_extremal(int n, int k, const Graph& h, std::int64_t f, Visitor&& visit,
                                     EnumerationOptions opts = {}, const Limits& limits = {}) {
  if (k < 1) throw InvalidParameter("class count k must be at least 1");
  if (n < 0) throw InvalidParameter("vertex count must be nonnegative");
  if (n > limits.enumeration_order)
    throw CapacityError("exhaustive enumeration supports n <= " + std::to_string(limits.enumeration_order) +
                        ", got " + std::to_string(n));
  if (f < 0) return 0;

  const std::int64_t floor_edges = turan_edge_count(n, k) - f;
  const auto pairs = detail::all_pairs(n);
  const ThroughEdgeTester tester(h);
  Graph cur(n);
  detail::IsoFilter filter;
  std::int64_t emitted = 0;

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    const auto have = static_cast<std::int64_t>(cur.edge_count());
    if (have + static_cast<std::int64_t>(pairs.size() - i) < floor_edges) return;
    if (i == pairs.size()) {
      if (opts.dedup && !filter.admit(cur)) return;
      ++emitted;
      visit(static_cast<const Graph&>(cur));
      return;
    }
    const Edge e = pairs[i];
    cur.add_edge(e.u, e.v);
    if (!tester.find(cur, e)) self(self, i + 1);
    cur.remove_edge(e.u, e.v);
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return emitted;
}

inline std::vector<Graph> near_extremal_graphs(int n, int k, const Graph& h, std::int64_t f,
                                               EnumerationOptions opts = {}, const Limits& limits = {}) {
  std::vector<Graph> out;
  enumerate_near_extremal(n, k, h, f, [&](const Graph& g) { out.push_back(g); }, opts, limits);
  return out;
}

/// Seeded random walks from T_k(n): each step deletes a random edge while the
/// deficiency stays within f, or adds a random non-edge that keeps the graph
/// h-free. Every visited state is emitted; duplicates are possible.
template <class Visitor>
std::int64_t sample_near_extremal(int n, int k, const Graph& h, std::int64_t f, std::uint64_t seed, int walks,
                                  int steps, Visitor&& visit) {
  if (f < 0) return 0;
  const std::int64_t tk = turan_edge_count(n, k);
  std::mt19937_64 rng(seed);
  const ThroughEdgeTester tester(h);
  std::int64_t emitted = 0;
  for (int w = 0; w < walks; ++w) {
    Graph g = turan_graph(n, k).graph;
    if (!is_free_of(g, h)) return emitted;
    for (int s = 0; s < steps; ++s) {
      const bool remove = (rng() & 1U) != 0;
      if (remove) {
        if (tk - static_cast<std::int64_t>(g.edge_count()) + 1 > f || g.edge_count() == 0) continue;
        const auto edges = g.edges();
        const Edge e = edges[static_cast<std::size_t>(rng() % edges.size())];
        g.remove_edge(e.u, e.v);
      } else {
        const Graph comp = g.complement();
        if (comp.edge_count() == 0) continue;
        const auto non = comp.edges();
        const Edge e = non[static_cast<std::size_t>(rng() % non.size())];
        g.add_edge(e.u, e.v);
        if (tester.find(g, e)) {
          g.remove_edge(e.u, e.v);
          continue;
        }
      }
      ++emitted;
      visit(static_cast<const Graph&>(g));
    }
  }
  return emitted;
}

// ---------------------------------------------------------------------------

enum class Verdict { Pass, Fail, Informational };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Informational: return "informational";
  }
  return "?";
}

struct VerificationReport {
  std::string check;
  int k = 0;
  int n = 0;
  std::int64_t f = 0;
  // "exhaustive", "sampled" or "exhaustive+sampled".
  std::string coverage = "exhaustive";
  std::int64_t graphs_examined = 0;
  std::int64_t max_observed_distance = 0;
  std::optional<std::string> witness;
  double bound_value = 0;
  std::optional<double> max_ratio;
  std::optional<std::int64_t> threshold;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> details;
};

struct FurediOptions {
  // Orders above limits.enumeration_order up to this value are sampled.
  int sampled_order = 12;
  std::uint64_t seed = 1;
  int walks = 40;
  int steps = 60;
};

/// Every K_{k+1}-free graph on n <= n_max vertices with deficiency
/// t <= f_max must become k-partite after deleting at most t edges.
inline VerificationReport verify_furedi(int k, int n_max, std::int64_t f_max, const FurediOptions& opts = {},
                                        const Limits& limits = {}) {
  if (k < 2) throw InvalidParameter("class count k must be at least 2");
  if (n_max > std::max(limits.enumeration_order, opts.sampled_order))
    throw CapacityError("verification supports n <= " +
                        std::to_string(std::max(limits.enumeration_order, opts.sampled_order)));
  VerificationReport rep;
  rep.check = "furedi";
  rep.k = k;
  rep.n = n_max;
  rep.f = f_max;
  rep.bound_value = static_cast<double>(f_max);
  const Graph clique = complete_graph(k + 1);
  bool sampled = false;
  double best_ratio = -1;
  std::int64_t violations = 0;

  auto check = [&](const Graph& g) {
    ++rep.graphs_examined;
    const std::int64_t t = turan_edge_count(g.order(), k) - static_cast<std::int64_t>(g.edge_count());
    const std::int64_t d = min_deletions_value(g, k, limits);
    if (d > t) {
      if (violations++ == 0) {
        rep.witness = graph6_encode(g);
        rep.details.push_back("violation: distance " + std::to_string(d) + " > deficiency " + std::to_string(t) +
                              " at " + *rep.witness);
      }
    }
    if (d > rep.max_observed_distance) {
      rep.max_observed_distance = d;
      if (violations == 0) rep.witness = graph6_encode(g);
    }
    if (t > 0) best_ratio = std::max(best_ratio, static_cast<double>(d) / static_cast<double>(t));
  };

  for (int n = 1; n <= n_max; ++n) {
    if (n <= limits.enumeration_order) {
      enumerate_near_extremal(n, k, clique, f_max, check, {}, limits);
    } else {
      sampled = true;
      sample_near_extremal(n, k, clique, f_max, opts.seed ^ static_cast<std::uint64_t>(n), opts.walks, opts.steps,
                           check);
    }
  }
  if (sampled) rep.coverage = n_max <= limits.enumeration_order ? "sampled" : "exhaustive+sampled";
  if (best_ratio >= 0) rep.max_ratio = best_ratio;
  rep.verdict = violations == 0 ? Verdict::Pass : Verdict::Fail;
  rep.details.push_back("violations: " + std::to_string(violations));
  return rep;
}

/// Whether T_k(n) is the unique h-free graph with the maximum number of
/// edges on n vertices. A negative answer is informational.
inline VerificationReport verify_unique_extremal(int n, int k, const Graph& h, const Limits& limits = {}) {
  VerificationReport rep;
  rep.check = "extremal";
  rep.k = k;
  rep.n = n;
  rep.bound_value = static_cast<double>(turan_edge_count(n, k));
  const Graph turan = turan_graph(n, k).graph;

  std::int64_t best = -1;
  std::vector<Graph> extremal;
  enumerate_near_extremal(
      n, k, h, 0,
      [&](const Graph& g) {
        ++rep.graphs_examined;
        const auto e = static_cast<std::int64_t>(g.edge_count());
        if (e > best) {
          best = e;
          extremal.clear();
        }
        if (e == best) extremal.push_back(g);
      },
      {}, limits);

  std::vector<Graph> classes;
  for (const auto& g : extremal)
    if (std::none_of(classes.begin(), classes.end(), [&](const Graph& c) { return is_isomorphic(c, g); }))
      classes.push_back(g);

  rep.details.push_back("maximum edges: " + std::to_string(best));
  rep.details.push_back("extremal graphs: " + std::to_string(extremal.size()) + " labeled, " +
                        std::to_string(classes.size()) + " up to isomorphism");
  const bool unique = classes.size() == 1 && is_isomorphic(classes.front(), turan);
  rep.verdict = unique ? Verdict::Pass : Verdict::Informational;
  for (const auto& c : classes)
    if (!is_isomorphic(c, turan)) {
      rep.witness = graph6_encode(c);
      break;
    }
  if (!unique && !rep.witness && !classes.empty()) rep.witness = graph6_encode(classes.front());
  return rep;
}

/// Smallest deficiency t_k(n) - e(G) over h-free graphs G on n vertices that
/// are not k-colourable; absent when every h-free graph is k-colourable.
inline VerificationReport verify_simonovits_threshold(int n, int k, const Graph& h, const Limits& limits = {}) {
  VerificationReport rep;
  rep.check = "threshold";
  rep.k = k;
  rep.n = n;
  rep.bound_value = static_cast<double>(n) / k;
  const std::int64_t tk = turan_edge_count(n, k);
  for (std::int64_t f = 0; f <= tk; ++f) {
    std::optional<std::int64_t> found;
    rep.graphs_examined = 0;
    enumerate_near_extremal(
        n, k, h, f,
        [&](const Graph& g) {
          ++rep.graphs_examined;
          const std::int64_t d = tk - static_cast<std::int64_t>(g.edge_count());
          if (found && d >= *found) return;
          if (!is_k_colourable(g, k)) {
            found = d;
            rep.witness = graph6_encode(g);
          }
        },
        {}, limits);
    if (found) {
      rep.threshold = found;
      rep.f = f;
      break;
    }
  }
  rep.verdict = Verdict::Informational;
  if (!rep.threshold) rep.details.push_back("every h-free graph on this order is k-colourable");
  return rep;
}

}  // namespace xstab
