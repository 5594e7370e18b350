#pragma once

#include <cstdint>

namespace xstab {

// Search capacities. These are configuration: every operation that honours
// a limit takes a Limits argument and raises CapacityError when exceeded.
struct Limits {
  // Largest graph order accepted by the exact primitives. Rows are single
  // 64-bit words up to 64 vertices and multi-word beyond.
  int max_order = 1024;

  // Exact partition solvers branch over twin classes (vertices with equal
  // neighbourhoods); these bound the number of branching units.
  int exact_units_bipartite = 32;
  int exact_units_multipartite = 24;

  // Upper bound on k^n for the exhaustive oracle.
  std::uint64_t oracle_budget = 100'000'000;

  // Largest n for full labeled enumeration of near-extremal graphs.
  int enumeration_order = 8;

  // Largest kn for the exhaustive T_k(kt)-free maximisation.
  int tkt_host_order = 10;

  int exact_units(int k) const {
    return k <= 2 ? exact_units_bipartite : exact_units_multipartite;
  }
};

}  // namespace xstab
