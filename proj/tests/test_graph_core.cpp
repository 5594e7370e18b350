#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "xstab/constructions.hpp"
#include "xstab/search.hpp"

using namespace xstab;

TEST(Graph, EdgesAreSymmetricAndLoopFree) {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 2);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(2, 2));
  g.remove_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(Graph, EdgeCountIsHalfTheRowPopcount) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(1 + i * 4, 0.4, rng);
    int total = 0;
    for (int v = 0; v < g.order(); ++v) total += g.neighbors(v).count();
    EXPECT_EQ(total, 2 * static_cast<int>(g.edge_count()));
  }
}

TEST(Graph, MultiWordRows) {
  Graph g(150);
  g.add_edge(3, 140);
  g.add_edge(70, 140);
  EXPECT_EQ(g.degree(140), 2);
  EXPECT_EQ(g.neighbors(140).members(), (std::vector<int>{3, 70}));
  EXPECT_EQ((g.neighbors(3) & g.neighbors(70)).first(), 140);
}

TEST(Graph, InducedAndComplement) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(is_isomorphic(c5.complement(), c5));
  const std::vector<int> keep = {0, 1, 2};
  EXPECT_EQ(c5.induced(keep).edge_count(), 2);
}

TEST(TuranCount, Fixtures) {
  EXPECT_EQ(turan_edge_count(4, 2), 4);
  EXPECT_EQ(turan_edge_count(7, 3), 16);
  EXPECT_EQ(turan_edge_count(5, 2), 6);
  EXPECT_EQ(turan_edge_count(0, 3), 0);
  EXPECT_THROW(turan_edge_count(4, 0), InvalidParameter);
}

TEST(TuranCount, PartsDifferByAtMostOne) {
  for (int n = 0; n <= 30; ++n)
    for (int k = 1; k <= 6; ++k) {
      const auto parts = turan_part_sizes(n, k);
      const auto [lo, hi] = std::minmax_element(parts.begin(), parts.end());
      EXPECT_LE(*hi - *lo, 1);
      EXPECT_TRUE(std::is_sorted(parts.rbegin(), parts.rend()));
    }
}

TEST(Chromatic, Fixtures) {
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(complete_graph(4)), 4);
  EXPECT_EQ(chromatic_number(mycielskian(complete_graph(3))), 4);
  EXPECT_EQ(chromatic_number(Graph(4)), 1);
  EXPECT_EQ(chromatic_number(petersen_graph()), 3);
}

TEST(Chromatic, MatchesBruteForceUpToEightVertices) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n, 0.2 + 0.1 * (i % 7), rng);
    ASSERT_EQ(chromatic_number(g), oracle::chromatic(g)) << i;
    ASSERT_EQ(clique_number(g), oracle::clique(g)) << i;
  }
}

TEST(Chromatic, ColouringIsProper) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(12, 0.4, rng);
    const int chi = chromatic_number(g);
    const auto col = k_colouring(g, chi);
    ASSERT_TRUE(col.has_value());
    for (const auto& e : g.edges()) EXPECT_NE((*col)[e.u], (*col)[e.v]);
    EXPECT_FALSE(is_k_colourable(g, chi - 1));
  }
}

TEST(Containment, Fixtures) {
  EXPECT_TRUE(contains_subgraph(complete_graph(5), complete_graph(4)).has_value());
  EXPECT_FALSE(contains_subgraph(cycle_graph(5), complete_graph(3)).has_value());
  EXPECT_FALSE(contains_subgraph(mycielskian(complete_graph(3)), complete_graph(4)).has_value());
  EXPECT_FALSE(contains_subgraph(complete_graph(3), complete_graph(4)).has_value());
  // Not induced: C4 sits inside K4.
  EXPECT_TRUE(contains_subgraph(complete_graph(4), cycle_graph(4)).has_value());
}

TEST(Containment, WitnessIsAnInjectiveEmbedding) {
  const Graph host = petersen_graph();
  const Graph pattern = path_graph(6);
  const auto w = contains_subgraph(host, pattern);
  ASSERT_TRUE(w.has_value());
  std::vector<int> seen = w->map;
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
  for (const auto& e : pattern.edges()) EXPECT_TRUE(host.adjacent(w->map[e.u], w->map[e.v]));
}

TEST(Containment, MatchesInjectionEnumeration) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const Graph host = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
    const Graph pattern = oracle::random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng);
    ASSERT_EQ(contains_subgraph(host, pattern).has_value(), oracle::contains(host, pattern)) << i;
  }
}

TEST(Containment, ThroughEdgeMatchesEnumeration) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const Graph host = oracle::random_graph(2 + static_cast<int>(rng() % 6), 0.55, rng);
    const Graph pattern = oracle::random_graph(2 + static_cast<int>(rng() % 3), 0.7, rng);
    if (host.edge_count() == 0) continue;
    const auto edges = host.edges();
    const Edge e = edges[rng() % edges.size()];
    ASSERT_EQ(contains_subgraph_through(host, pattern, e).has_value(),
              oracle::contains(host, pattern, e.u, e.v))
        << i;
  }
}

TEST(Containment, TwinRichHostsStillAgree) {
  // Blow-ups have many twins, which the search collapses.
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const Graph base = oracle::random_graph(4, 0.6, rng);
    std::vector<int> mult = {1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5),
                             1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5)};
    const Graph host = blowup(base, mult);
    const Graph pattern = oracle::random_graph(4, 0.6, rng);
    ASSERT_EQ(contains_subgraph(host, pattern).has_value(), oracle::contains(host, pattern)) << i;
  }
}

TEST(Homomorphism, Fixtures) {
  const std::vector<int> ones(5, 1), threes(5, 3);
  EXPECT_TRUE(hom_with_capacities(cycle_graph(5), cycle_graph(5), ones).has_value());
  EXPECT_FALSE(hom_with_capacities(complete_graph(3), cycle_graph(5), threes).has_value());
  const Graph mk3 = mycielskian(complete_graph(3));
  EXPECT_FALSE(hom_with_capacities(complete_graph(4), mk3, std::vector<int>(7, 4)).has_value());
  EXPECT_THROW(hom_with_capacities(complete_graph(2), cycle_graph(5), std::vector<int>(5, -1)), InvalidParameter);
}

TEST(Homomorphism, MapRespectsEdgesAndCapacities) {
  const Graph target = mycielskian(complete_graph(2));
  const std::vector<int> caps = {2, 2, 2, 2, 2};
  const Graph pattern = cycle_graph(9);
  const auto map = hom_with_capacities(pattern, target, caps);
  ASSERT_TRUE(map.has_value());
  std::vector<int> load(5, 0);
  for (int x : *map) ++load[x];
  for (int t = 0; t < 5; ++t) EXPECT_LE(load[t], caps[t]);
  for (const auto& e : pattern.edges()) EXPECT_TRUE(target.adjacent((*map)[e.u], (*map)[e.v]));
}

TEST(Homomorphism, MatchesNaiveEnumeration) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Graph pattern = oracle::random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
    const Graph target = oracle::random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng);
    std::vector<int> caps(static_cast<std::size_t>(target.order()));
    for (auto& c : caps) c = static_cast<int>(rng() % 3);
    ASSERT_EQ(hom_with_capacities(pattern, target, caps).has_value(), oracle::hom(pattern, target, caps)) << i;
  }
}

TEST(Homomorphism, UniformCapsMatchBlowupContainment) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 60; ++i) {
    const int p = 2 + static_cast<int>(rng() % 5);
    const Graph pattern = oracle::random_graph(p, 0.5, rng);
    const Graph target = oracle::random_graph(2 + static_cast<int>(rng() % 6), 0.5, rng);
    const std::vector<int> caps(static_cast<std::size_t>(target.order()), p);
    const Graph blown = blowup(target, caps);
    ASSERT_EQ(hom_with_capacities(pattern, target, caps).has_value(), contains_subgraph(blown, pattern).has_value())
        << i;
  }
}

TEST(LowDegree, Fixtures) {
  EXPECT_TRUE(low_degree_set(turan_graph(8, 2).graph, 2, 0.1).empty());
  const auto leaves = low_degree_set(star_graph(7), 2, 0.1);
  EXPECT_EQ(leaves.members(), (std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(low_degree_set(Graph(4), 2, 0.0).count(), 4);
  EXPECT_THROW(low_degree_set(Graph(4), 1, 0.0), InvalidParameter);
}

TEST(LowDegree, MonotoneInDelta) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(20, 0.5, rng);
    VertexSet prev = low_degree_set(g, 3, 0.0);
    for (double d = 0.05; d < 1.0; d += 0.05) {
      const VertexSet cur = low_degree_set(g, 3, d);
      // Larger delta lowers the threshold, so the set can only shrink.
      EXPECT_EQ(cur.intersection_count(prev), cur.count());
      prev = cur;
    }
  }
}

TEST(Isomorphism, MatchesPermutationSearch) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph a = oracle::random_graph(n, 0.5, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph b = (i % 2) ? a.relabeled(perm) : oracle::random_graph(n, 0.5, rng);
    ASSERT_EQ(is_isomorphic(a, b), oracle::isomorphic(a, b)) << i;
  }
}
