#pragma once

// Construction measurement and parameter sweeps: one row per (family,
// parameters) cell, computed on a worker pool and emitted in sorted order,
// plus least-squares exponent fits of distance against n and f.
//
// Fits are ordinary least squares on natural logs. In every fit group the
// two smallest n values are dropped before fitting.

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "xstab/classify.hpp"
#include "xstab/constructions.hpp"
#include "xstab/errors.hpp"
#include "xstab/graph.hpp"
#include "xstab/limits.hpp"
#include "xstab/search.hpp"
#include "xstab/solvers.hpp"

namespace xstab {

inline constexpr int kSchemaVersion = 1;

inline const std::vector<std::string>& known_families() {
  static const std::vector<std::string> names = {"turan",     "imbalanced", "counter1",  "propcount1",
                                                 "qary",      "qary_raw",   "mk_blowup", "mk_layered"};
  return names;
}

enum class SolveMode { Exact, Heuristic, Oracle, Edit };

inline std::string to_string(SolveMode m) {
  switch (m) {
    case SolveMode::Exact: return "exact";
    case SolveMode::Heuristic: return "heuristic";
    case SolveMode::Oracle: return "oracle";
    case SolveMode::Edit: return "edit";
  }
  return "?";
}

inline SolveMode parse_solve_mode(const std::string& s) {
  if (s == "exact") return SolveMode::Exact;
  if (s == "heuristic") return SolveMode::Heuristic;
  if (s == "oracle") return SolveMode::Oracle;
  if (s == "edit") return SolveMode::Edit;
  throw InvalidParameter("unknown mode '" + s + "' (expected exact, heuristic, oracle or edit)");
}

struct FamilyParams {
  std::string family;
  int n = 0;
  int k = 2;
  std::int64_t f = 0;
  int m = 0;       // imbalanced
  int layers = 1;  // propcount1 N, mk_layered l
  int a = 0;
  int b = 1;
  int c = 1;
};

struct SweepRow {
  std::string family;  // label, e.g. "propcount1_N2"
  int n = 0;
  int k = 0;
  std::int64_t f = 0;
  std::optional<std::int64_t> edges;
  std::optional<std::int64_t> deficiency;
  std::optional<std::int64_t> claimed_deficiency;
  std::optional<std::int64_t> distance;
  std::string distance_mode;
  std::optional<std::int64_t> edit_distance;
  std::optional<bool> h_free;
  std::string status = "ok";
  std::string message;
  double elapsed_ms = 0;
  // f = ceil(n^alpha) rule or f = c n rule that produced the cell, if any.
  std::string f_rule;
};

inline std::string family_label(const FamilyParams& p) {
  if (p.family == "imbalanced") return "imbalanced_m" + std::to_string(p.m);
  if (p.family == "propcount1") return "propcount1_N" + std::to_string(p.layers);
  if (p.family == "mk_layered") return "mk_layered_l" + std::to_string(p.layers);
  return p.family;
}

/// Builds the artifact for a family. counter1, propcount1 and qary certify
/// e >= t_k(n) - f; qary uses the largest scale that fits the budget, while
/// qary_raw keeps scale f and records whatever deficiency results.
inline ConstructionArtifact build_family(const FamilyParams& p) {
  const auto& f = p.family;
  if (f == "turan") return turan_graph(p.n, p.k);
  if (f == "imbalanced") return imbalanced_turan(p.n, p.k, p.m);
  if (f == "counter1") return clique_free_blowup(p.n, p.k, p.f);
  if (f == "propcount1") return layered_blowup(p.n, p.k, p.layers, p.f);
  if (f == "qary") return qary_within_budget(p.n, p.k, p.f);
  if (f == "qary_raw") return qary_rewired_blowup(p.n, p.k, p.f);
  if (f == "mk_blowup") return mk_blowup(p.k, p.a, p.b, p.c);
  if (f == "mk_layered") return mk_layered(p.k, p.layers, p.a, p.b, p.c);
  throw InvalidParameter("unknown family '" + f + "'");
}

/// No two apex vertices share a neighbour in every W_i.
inline bool qary_apex_pairs_separated(const ConstructionArtifact& art) {
  const auto apex = art.cls("U").members();
  for (std::size_t x = 0; x < apex.size(); ++x)
    for (std::size_t y = x + 1; y < apex.size(); ++y) {
      const VertexSet common = art.graph.neighbors(apex[x]) & art.graph.neighbors(apex[y]);
      bool separated = false;
      for (int i = 1; i <= art.k && !separated; ++i)
        if (!common.intersects(art.cls("W" + std::to_string(i)))) separated = true;
      if (!separated) return false;
    }
  return true;
}

/// Every set of `size` vertices induces a k-colourable graph.
inline bool small_subsets_colourable(const Graph& g, int k, int size) {
  const int n = g.order();
  if (size > n) return true;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (!is_k_colourable(g.induced(pick), k)) return false;
    int i = size - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) return true;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline constexpr int kSubsetCheckOrder = 14;

/// The family's designated forbidden-graph check: K_{k+1}-freeness for
/// counter1 and the Mycielskian families, no M_k(1,1,2) plus separated apex
/// pairs for qary, (N+1)-subset k-colourability for propcount1 on at most
/// 14 vertices. Absent when the family has no check at this size.
inline std::optional<bool> designated_h_check(const FamilyParams& p, const ConstructionArtifact& art) {
  const auto& f = p.family;
  if (f == "counter1" || f == "mk_blowup" || f == "mk_layered" || f == "turan" || f == "imbalanced")
    return is_free_of(art.graph, complete_graph(p.k + 1));
  if (f == "qary" || f == "qary_raw")
    return qary_apex_pairs_separated(art) && is_free_of(art.graph, mk_blowup(p.k, 1, 1, 2).graph);
  if (f == "propcount1") {
    if (art.graph.order() > kSubsetCheckOrder) return std::nullopt;
    return small_subsets_colourable(art.graph, p.k, p.layers + 1);
  }
  return std::nullopt;
}

/// Builds, checks and measures one construction. Errors are recorded in the
/// row's status. In exact and edit modes a capacity error falls back to the
/// seeded heuristic and the row is labelled "heuristic".
inline SweepRow measure_construction(const FamilyParams& p, SolveMode mode, std::uint64_t seed = 1,
                                     const Limits& limits = {}) {
  const auto start = std::chrono::steady_clock::now();
  SweepRow row;
  row.family = family_label(p);
  row.n = p.n;
  row.k = p.k;
  row.f = p.f;
  try {
    const ConstructionArtifact art = build_family(p);
    const Graph& g = art.graph;
    row.n = g.order();
    if (p.family == "turan" || p.family == "imbalanced" || p.family.rfind("mk_", 0) == 0)
      row.f = art.actual_deficiency;
    row.edges = static_cast<std::int64_t>(g.edge_count());
    row.deficiency = art.actual_deficiency;
    row.claimed_deficiency = art.claimed_deficiency;
    row.h_free = designated_h_check(p, art);

    switch (mode) {
      case SolveMode::Heuristic:
        row.distance = min_deletions_heuristic(g, p.k, seed).count;
        row.distance_mode = "heuristic";
        break;
      case SolveMode::Oracle:
        row.distance = naive_min_deletions_oracle(g, p.k, limits);
        row.distance_mode = "oracle";
        break;
      case SolveMode::Exact:
      case SolveMode::Edit:
        try {
          row.distance = min_deletions_value(g, p.k, limits);
          row.distance_mode = "exact";
        } catch (const CapacityError&) {
          row.distance = min_deletions_heuristic(g, p.k, seed).count;
          row.distance_mode = "heuristic";
        }
        break;
    }
    try {
      row.edit_distance = edit_distance_to_turan(g, p.k, limits).total;
    } catch (const CapacityError&) {
      if (mode == SolveMode::Edit) row.message = "edit distance beyond exact capacity";
    }
    if (row.h_free && !*row.h_free) row.status = "h_check_failed";
  } catch (const ConstructionError& e) {
    row.status = "construction_error";
    row.message = e.what();
    if (e.achieved_deficiency() >= 0) row.deficiency = e.achieved_deficiency();
  } catch (const CapacityError& e) {
    row.status = "capacity_error";
    row.message = e.what();
  } catch (const InvalidParameter& e) {
    row.status = "invalid_parameter";
    row.message = e.what();
  } catch (const Error& e) {
    row.status = "error";
    row.message = e.what();
  }
  row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

// ---------------------------------------------------------------------------

struct FRule {
  enum class Kind { Power, Linear } kind = Kind::Power;
  double value = 1.0;

  std::int64_t apply(int n) const {
    if (kind == Kind::Linear) return static_cast<std::int64_t>(std::llround(value * n));
    // Guard against pow() landing just above an integer.
    return static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(n), value) - 1e-9));
  }
  std::string str() const {
    std::ostringstream os;
    os << (kind == Kind::Power ? "f=ceil(n^" : "f=") << value << (kind == Kind::Power ? ")" : "n");
    return os.str();
  }
};

struct SweepConfig {
  std::vector<std::string> families = {"counter1", "qary"};
  std::vector<int> ks = {2};
  std::vector<int> ns = {32, 40, 48, 56, 64};
  std::vector<FRule> f_rules = {{FRule::Kind::Power, 1.2}};
  std::vector<int> layers = {1, 2, 3};
  std::vector<int> imbalances = {1, 2, 3};
  int b = 1;
  int c = 1;
  SolveMode mode = SolveMode::Exact;
  std::uint64_t seed = 1;
  int workers = 0;
  Limits limits;
};

/// Worker count: an explicit positive request, else XSTAB_WORKERS, else the
/// hardware concurrency.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("XSTAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct SweepCell {
  FamilyParams params;
  std::string f_rule;
};

inline std::vector<SweepCell> sweep_cells(const SweepConfig& cfg) {
  std::vector<SweepCell> cells;
  for (const auto& fam : cfg.families) {
    if (std::find(known_families().begin(), known_families().end(), fam) == known_families().end())
      throw InvalidParameter("unknown family '" + fam + "'");
    for (int k : cfg.ks)
      for (int n : cfg.ns) {
        FamilyParams base;
        base.family = fam;
        base.n = n;
        base.k = k;
        if (fam == "turan") {
          cells.push_back({base, ""});
        } else if (fam == "imbalanced") {
          for (int m : cfg.imbalances) {
            auto p = base;
            p.m = m;
            cells.push_back({p, ""});
          }
        } else if (fam == "mk_blowup" || fam == "mk_layered") {
          for (int l : fam == "mk_layered" ? cfg.layers : std::vector<int>{1}) {
            auto p = base;
            p.layers = l;
            p.b = cfg.b;
            p.c = cfg.c;
            p.a = std::max(0, (n - k * l * cfg.b - cfg.c) / k);
            cells.push_back({p, ""});
          }
        } else {
          for (const auto& rule : cfg.f_rules)
            for (int l : fam == "propcount1" ? cfg.layers : std::vector<int>{1}) {
              auto p = base;
              p.f = rule.apply(n);
              p.layers = l;
              cells.push_back({p, rule.str()});
            }
        }
      }
  }
  return cells;
}

}  // namespace detail

struct FitResult {
  std::string family;
  int k = 0;
  // The f-rule of the group, or "pooled" for a joint fit over all rules.
  std::string group;
  int points = 0;
  std::string status;  // "ok", "degenerate" or "insufficient"
  std::optional<double> n_slope;  // d ~ n^slope along the group
  std::optional<double> f_exponent;
  std::optional<double> n_exponent;
  std::optional<Rational> predicted_f;
  std::optional<Rational> predicted_n;
  std::optional<double> predicted_slope;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<FitResult> fits;
};

/// Predicted (f, n) exponents of the distance for the measured families.
inline std::optional<std::pair<Rational, Rational>> predicted_exponents(const std::string& label, int k) {
  if (label == "counter1") return std::pair{Rational(3, 2), Rational(-1)};
  if (label == "qary" || label == "qary_raw") return std::pair{Rational(3 * k - 2, 2 * k), Rational(1 - k, k)};
  if (label.rfind("propcount1", 0) == 0) return std::pair{Rational(2), Rational(-2)};
  return std::nullopt;
}

namespace detail {

inline bool fit_usable(const SweepRow& r) { return r.status == "ok" && r.distance.has_value(); }

// Rows of one group with the two smallest n removed.
inline std::vector<const SweepRow*> trimmed(std::vector<const SweepRow*> rows) {
  std::vector<int> ns;
  for (const auto* r : rows) ns.push_back(r->n);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (ns.size() <= 2) return {};
  const int cutoff = ns[1];
  std::erase_if(rows, [&](const SweepRow* r) { return r->n <= cutoff; });
  return rows;
}

inline Eigen::VectorXd least_squares(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  return x.colPivHouseholderQr().solve(y);
}

}  // namespace detail

inline std::vector<FitResult> fit_exponents(const std::vector<SweepRow>& rows) {
  std::map<std::tuple<std::string, int, std::string>, std::vector<const SweepRow*>> groups;
  std::map<std::pair<std::string, int>, std::vector<const SweepRow*>> pooled;
  for (const auto& r : rows) {
    if (!detail::fit_usable(r)) continue;
    groups[{r.family, r.k, r.f_rule}].push_back(&r);
  }

  std::vector<FitResult> out;
  auto prepare = [](FitResult& fr, const std::vector<const SweepRow*>& pts) {
    fr.points = static_cast<int>(pts.size());
    if (pts.size() < 2) {
      fr.status = "insufficient";
      return false;
    }
    if (std::any_of(pts.begin(), pts.end(), [](const SweepRow* r) { return *r->distance <= 0; })) {
      fr.status = "degenerate";
      return false;
    }
    return true;
  };

  for (const auto& [key, members] : groups) {
    const auto& [family, k, rule] = key;
    FitResult fr;
    fr.family = family;
    fr.k = k;
    fr.group = rule.empty() ? "all" : rule;
    const auto pred = predicted_exponents(family, k);
    if (pred) {
      fr.predicted_f = pred->first;
      fr.predicted_n = pred->second;
    }
    const auto pts = detail::trimmed(members);
    for (const auto* r : pts) pooled[{family, k}].push_back(r);
    if (std::all_of(members.begin(), members.end(), [](const SweepRow* r) { return *r->distance == 0; })) {
      fr.points = static_cast<int>(pts.size());
      fr.status = "degenerate";
    } else if (prepare(fr, pts)) {
      Eigen::MatrixXd x(static_cast<Eigen::Index>(pts.size()), 2);
      Eigen::VectorXd y(static_cast<Eigen::Index>(pts.size()));
      for (std::size_t i = 0; i < pts.size(); ++i) {
        x(static_cast<Eigen::Index>(i), 0) = 1.0;
        x(static_cast<Eigen::Index>(i), 1) = std::log(static_cast<double>(pts[i]->n));
        y(static_cast<Eigen::Index>(i)) = std::log(static_cast<double>(*pts[i]->distance));
      }
      fr.n_slope = detail::least_squares(x, y)(1);
      fr.status = "ok";
      // Along f = n^alpha (or f = c n) the predicted slope is alpha e_f + e_n.
      if (pred && !rule.empty()) {
        const double alpha = rule.rfind("f=ceil(n^", 0) == 0 ? std::stod(rule.substr(9)) : 1.0;
        fr.predicted_slope = alpha * pred->first.value() + pred->second.value();
      }
    }
    out.push_back(std::move(fr));
  }

  // Joint fit on (log n, log f) when a family was swept under several rules.
  for (const auto& [key, pts] : pooled) {
    std::vector<std::string> rules;
    for (const auto* r : pts) rules.push_back(r->f_rule);
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    if (rules.size() < 2) continue;
    FitResult fr;
    fr.family = key.first;
    fr.k = key.second;
    fr.group = "pooled";
    if (const auto pred = predicted_exponents(key.first, key.second)) {
      fr.predicted_f = pred->first;
      fr.predicted_n = pred->second;
    }
    if (prepare(fr, pts) && pts.size() >= 3) {
      Eigen::MatrixXd x(static_cast<Eigen::Index>(pts.size()), 3);
      Eigen::VectorXd y(static_cast<Eigen::Index>(pts.size()));
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        x(row, 0) = 1.0;
        x(row, 1) = std::log(static_cast<double>(pts[i]->f));
        x(row, 2) = std::log(static_cast<double>(pts[i]->n));
        y(row) = std::log(static_cast<double>(*pts[i]->distance));
      }
      const Eigen::VectorXd beta = detail::least_squares(x, y);
      fr.f_exponent = beta(1);
      fr.n_exponent = beta(2);
      fr.status = "ok";
    } else if (fr.status.empty()) {
      fr.status = "insufficient";
    }
    out.push_back(std::move(fr));
  }
  return out;
}

/// Runs every cell of the configuration on a worker pool. Rows come back
/// sorted by (family, n, f, k, f-rule) whatever the schedule; each cell's
/// heuristic seed is derived from the sweep seed and the cell parameters.
inline SweepResult sweep(const SweepConfig& cfg) {
  const auto cells = detail::sweep_cells(cfg);
  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const auto& p = cells[i].params;
      const std::uint64_t cell_seed = detail::splitmix64(
          cfg.seed ^ detail::fnv1a(family_label(p)) ^ (static_cast<std::uint64_t>(p.n) << 32) ^
          (static_cast<std::uint64_t>(p.f) << 8) ^ static_cast<std::uint64_t>(p.k));
      rows[i] = measure_construction(p, cfg.mode, cell_seed, cfg.limits);
      rows[i].f_rule = cells[i].f_rule;
    }
  };
  const int workers = std::min<int>(resolve_workers(cfg.workers), static_cast<int>(std::max<std::size_t>(1, cells.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.family, a.n, a.f, a.k, a.f_rule) < std::tie(b.family, b.n, b.f, b.k, b.f_rule);
  });
  SweepResult out;
  out.fits = fit_exponents(rows);
  out.rows = std::move(rows);
  return out;
}

inline const char* sweep_csv_header() {
  return "family,n,k,f,edges,deficiency,distance,distance_mode,edit_distance,status,elapsed_ms,schema_version";
}

/// CSV with header. elapsed_ms is left empty unless timing is requested so
/// that equal configurations give identical bytes.
inline std::string sweep_csv(const std::vector<SweepRow>& rows, bool timing = false) {
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  std::ostringstream os;
  os << sweep_csv_header() << '\n';
  for (const auto& r : rows) {
    os << r.family << ',' << r.n << ',' << r.k << ',' << r.f << ',' << opt(r.edges) << ',' << opt(r.deficiency)
       << ',' << opt(r.distance) << ',' << r.distance_mode << ',' << opt(r.edit_distance) << ',' << r.status << ',';
    if (timing) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(3);
      ms << r.elapsed_ms;
      os << ms.str();
    }
    os << ',' << kSchemaVersion << '\n';
  }
  return os.str();
}

inline std::string fit_report(const std::vector<FitResult>& fits) {
  std::ostringstream os;
  os << "# exponent fits: OLS on logs, two smallest n dropped per group\n";
  for (const auto& f : fits) {
    os << f.family << " k=" << f.k << " [" << f.group << "] points=" << f.points << " status=" << f.status;
    if (f.n_slope) os << " slope_n=" << *f.n_slope;
    if (f.predicted_slope) os << " predicted_slope_n=" << *f.predicted_slope;
    if (f.f_exponent) os << " fitted=(f^" << *f.f_exponent << ", n^" << *f.n_exponent << ")";
    if (f.predicted_f) os << " predicted=(f^" << f.predicted_f->str() << ", n^" << f.predicted_n->str() << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace xstab
