#pragma once

// Preconditions and bound regime of a forbidden graph H for class count k:
// chromatic number k+1, critical edges, and containment in blown-up
// Mycielskians of K_k, decided by capacity-bounded homomorphisms into M(K_k).

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "xstab/constructions.hpp"
#include "xstab/errors.hpp"
#include "xstab/graph.hpp"
#include "xstab/search.hpp"

namespace xstab {

enum class Regime {
  NotInAAA,   // H is in no M_k(a,a,a)
  InAA1,      // H is in some M_k(a,a,1)
  InAAAOnly,  // in some M_k(a,a,a) but no M_k(a,a,1)
};

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::NotInAAA: return "NOT_IN_AAA";
    case Regime::InAA1: return "IN_AA1";
    case Regime::InAAAOnly: return "IN_AAA_ONLY";
  }
  return "?";
}

struct RegimeClassification {
  int chi = 0;
  std::vector<Edge> critical_edges;
  Regime regime = Regime::NotInAAA;
  // Smallest W-class size b with H in M_k(t,b,a), t and a capped at |H|.
  std::optional<int> minimal_b;
  // Largest V- and apex-fibres of the homomorphism that witnessed minimal_b.
  std::optional<int> witness_t;
  std::optional<int> witness_a;
  std::optional<std::vector<int>> witness_map;
};

/// Edges e with chi(h - e) = chi(h) - 1.
inline std::vector<Edge> find_critical_edges(const Graph& h) {
  if (h.edge_count() == 0) throw PreconditionError("critical edges need a graph with at least one edge");
  const int chi = chromatic_number(h);
  std::vector<Edge> out;
  for (const auto& e : h.edges())
    if (is_k_colourable(h.without_edge(e), chi - 1)) out.push_back(e);
  return out;
}

/// M(K_k) with V = 0..k-1, W = k..2k-1 and apex 2k.
inline Graph mycielskian_of_clique(int k) { return mycielskian(complete_graph(k)); }

/// Capacities on M(K_k): t on each V-vertex, b on each W-vertex, a on the apex.
inline std::vector<int> mycielski_caps(int k, int t, int b, int a) {
  std::vector<int> caps(static_cast<std::size_t>(2 * k + 1));
  for (int i = 0; i < k; ++i) {
    caps[static_cast<std::size_t>(i)] = t;
    caps[static_cast<std::size_t>(k + i)] = b;
  }
  caps[static_cast<std::size_t>(2 * k)] = a;
  return caps;
}

/// Whether H is a subgraph of M_k(t,b,a), via a homomorphism into M(K_k)
/// with those fibre capacities.
inline std::optional<std::vector<int>> mycielski_blowup_hom(const Graph& h, int k, int t, int b, int a) {
  const Graph target = mycielskian_of_clique(k);
  const auto caps = mycielski_caps(k, t, b, a);
  return hom_with_capacities(h, target, caps);
}

inline RegimeClassification regime_of(const Graph& h, int k) {
  if (k < 2) throw InvalidParameter("class count k must be at least 2");
  if (h.edge_count() == 0) throw PreconditionError("forbidden graph has no edges");
  RegimeClassification out;
  out.chi = chromatic_number(h);
  if (out.chi != k + 1)
    throw PreconditionError("chromatic number of H is " + std::to_string(out.chi) + ", expected k+1 = " +
                            std::to_string(k + 1));
  out.critical_edges = find_critical_edges(h);
  if (out.critical_edges.empty()) throw PreconditionError("H has no critical edge");

  const int size = h.order();
  if (!mycielski_blowup_hom(h, k, size, size, size)) {
    out.regime = Regime::NotInAAA;
    return out;
  }
  out.regime = mycielski_blowup_hom(h, k, size, size, 1) ? Regime::InAA1 : Regime::InAAAOnly;

  for (int b = 1; b <= size; ++b) {
    auto map = mycielski_blowup_hom(h, k, size, b, size);
    if (!map) continue;
    out.minimal_b = b;
    std::vector<int> fibre(static_cast<std::size_t>(2 * k + 1), 0);
    for (int x : *map) ++fibre[static_cast<std::size_t>(x)];
    out.witness_t = *std::max_element(fibre.begin(), fibre.begin() + k);
    out.witness_a = fibre[static_cast<std::size_t>(2 * k)];
    out.witness_map = std::move(map);
    break;
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t p, std::int64_t q = 1) {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    num = g ? p / g : p;
    den = g ? q / g : q;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A bound of the form f^f_exp * n^n_exp (up to a constant).
struct BoundShape {
  std::string source;
  Rational f_exp;
  Rational n_exp;

  double evaluate(double n, double f) const { return std::pow(f, f_exp.value()) * std::pow(n, n_exp.value()); }
  std::string str() const { return "f^(" + f_exp.str() + ") n^(" + n_exp.str() + ")"; }
};

struct StabilityBounds {
  RegimeClassification regime;
  BoundShape upper;
  // Present when a second upper bound is better for some f (the generic
  // f^(3/2)/n bound versus the b-dependent one).
  std::optional<BoundShape> alternative_upper;
  // The b-dependent upper bound beats the generic one when f >> n^crossover.
  std::optional<Rational> crossover_f_exponent;
  BoundShape lower;
  bool tight = false;
};

inline BoundShape generic_upper_bound() { return {"critical-edge", Rational(3, 2), Rational(-1)}; }
inline BoundShape apex_one_upper_bound() { return {"apex-one-blowup", Rational(2), Rational(-2)}; }
inline BoundShape blowup_upper_bound(int b, int k) {
  return {"blowup-b" + std::to_string(b), Rational(b * k - 1, b * k), Rational(1, b * k)};
}
inline BoundShape sparse_w_lower_bound() { return {"blowup-construction", Rational(3, 2), Rational(-1)}; }
inline BoundShape layered_lower_bound() { return {"layered-construction", Rational(2), Rational(-2)}; }

/// The tightest upper-bound exponents that apply to H and the matching
/// lower-bound construction.
inline StabilityBounds applicable_theorem(const Graph& h, int k) {
  StabilityBounds out;
  out.regime = regime_of(h, k);
  switch (out.regime.regime) {
    case Regime::NotInAAA:
      out.upper = generic_upper_bound();
      out.lower = sparse_w_lower_bound();
      break;
    case Regime::InAA1:
      out.upper = apex_one_upper_bound();
      out.lower = layered_lower_bound();
      break;
    case Regime::InAAAOnly: {
      const int b = *out.regime.minimal_b;
      out.upper = blowup_upper_bound(b, k);
      out.alternative_upper = generic_upper_bound();
      out.crossover_f_exponent = Rational(2 * (b * k + 1), b * k + 2);
      out.lower = layered_lower_bound();
      break;
    }
  }
  out.tight = out.upper.f_exp == out.lower.f_exp && out.upper.n_exp == out.lower.n_exp;
  return out;
}

}  // namespace xstab
