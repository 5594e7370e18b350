#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "xstab/constructions.hpp"
#include "xstab/search.hpp"
#include "xstab/sweep.hpp"

using namespace xstab;

namespace {

std::int64_t edges_of(const ConstructionArtifact& a) { return static_cast<std::int64_t>(a.graph.edge_count()); }

}  // namespace

TEST(Turan, Fixtures) {
  const auto c4 = turan_graph(4, 2);
  EXPECT_EQ(edges_of(c4), 4);
  EXPECT_TRUE(is_isomorphic(c4.graph, cycle_graph(4)));
  EXPECT_EQ(edges_of(turan_graph(7, 3)), 16);
  EXPECT_EQ(turan_graph(5, 5).graph, complete_graph(5));
  EXPECT_EQ(turan_graph(9, 3).actual_deficiency, 0);
}

TEST(Mycielskian, SmallCases) {
  EXPECT_TRUE(is_isomorphic(mycielskian(complete_graph(2)), cycle_graph(5)));
  const Graph m1 = mycielskian(Graph(1));
  EXPECT_EQ(m1.order(), 3);
  EXPECT_EQ(m1.edge_count(), 1U);
  EXPECT_TRUE(m1.adjacent(1, 2));
  EXPECT_EQ(mycielskian(complete_graph(3)).edge_count(), 12U);
}

TEST(Mycielskian, RaisesChromaticNumberKeepsClique) {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 40; ++i) {
    // n <= 5 keeps the brute-force colouring of M(g) affordable.
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 4), 0.5, rng);
    if (g.edge_count() == 0) continue;
    const Graph m = mycielskian(g);
    EXPECT_EQ(oracle::chromatic(m), oracle::chromatic(g) + 1);
    EXPECT_EQ(oracle::clique(m), oracle::clique(g));
  }
}

TEST(Blowup, Fixtures) {
  const std::vector<int> m23 = {2, 3};
  EXPECT_TRUE(is_isomorphic(blowup(complete_graph(2), m23), turan_graph(5, 2).graph));
  const Graph p = petersen_graph();
  EXPECT_EQ(blowup(p, std::vector<int>(10, 1)), p);
  const std::vector<int> mk = {1, 1, 1, 2, 2, 2, 2};
  EXPECT_TRUE(is_isomorphic(blowup(mycielskian(complete_graph(3)), mk), mk_blowup(3, 1, 2, 2).graph));
  // A zero multiplicity deletes the vertex.
  EXPECT_EQ(blowup(complete_graph(3), std::vector<int>{1, 0, 1}).edge_count(), 1U);
}

TEST(MkBlowup, FigureCounts) {
  const auto m111 = mk_blowup(3, 1, 1, 1);
  EXPECT_EQ(m111.graph.order(), 7);
  EXPECT_EQ(edges_of(m111), 12);
  EXPECT_TRUE(is_isomorphic(m111.graph, mycielskian(complete_graph(3))));
  const auto m122 = mk_blowup(3, 1, 2, 2);
  EXPECT_EQ(m122.graph.order(), 11);
  EXPECT_EQ(edges_of(m122), 27);
  EXPECT_TRUE(is_isomorphic(mk_blowup(3, 2, 0, 0).graph, turan_graph(6, 3).graph));
  EXPECT_NO_THROW(m122.cls("W2"));
  EXPECT_NO_THROW(m122.cls("U"));
}

TEST(MkLayered, CountsAndStructure) {
  EXPECT_TRUE(is_isomorphic(mk_layered(3, 1, 1, 2, 2).graph, mk_blowup(3, 1, 2, 2).graph));
  for (int k : {2, 3})
    for (int l : {1, 2, 3}) {
      const int a = 2, b = 1, c = 2;
      const auto art = mk_layered(k, l, a, b, c);
      EXPECT_EQ(art.graph.order(), k * a + k * l * b + c);
      const std::int64_t expect = static_cast<std::int64_t>(k) * (k - 1) / 2 * a * a +
                                  static_cast<std::int64_t>(k) * (k - 1) * a * b +
                                  static_cast<std::int64_t>(l - 1) * k * (k - 1) * b * b +
                                  static_cast<std::int64_t>(k) * b * c;
      EXPECT_EQ(edges_of(art), expect) << k << " " << l;
      EXPECT_EQ(chromatic_number(art.graph), k + 1);

      VertexSet keep = VertexSet::full(art.graph.order());
      keep -= art.cls("U");
      EXPECT_TRUE(is_k_colourable(art.graph.induced(keep), k));
      VertexSet no_v = VertexSet::full(art.graph.order());
      for (int i = 1; i <= k; ++i) no_v -= art.cls("V" + std::to_string(i));
      EXPECT_TRUE(is_k_colourable(art.graph.induced(no_v), 2));
    }
  EXPECT_EQ(mk_layered(3, 3, 1, 2, 3).graph.order(), 24);
}

TEST(Imbalanced, Fixtures) {
  EXPECT_EQ(imbalanced_turan(8, 2, 0).actual_deficiency, 0);
  const auto k35 = imbalanced_turan(8, 2, 1);
  EXPECT_EQ(edges_of(k35), 15);
  EXPECT_EQ(k35.actual_deficiency, 1);
  EXPECT_EQ(imbalanced_turan(12, 3, 2).actual_deficiency, 4);
  EXPECT_THROW(imbalanced_turan(8, 2, 5), InvalidParameter);
}

TEST(Counter1, SmallInstance) {
  const auto art = construction_counter1(20, 2, 40);
  EXPECT_EQ(art.params.at("r"), 1);
  EXPECT_EQ(art.params.at("s"), 1);
  EXPECT_EQ(art.params.at("a"), 8);
  EXPECT_EQ(art.graph.order(), 20);
  EXPECT_GE(edges_of(art), turan_edge_count(20, 2) - 40);
  EXPECT_FALSE(contains_subgraph(art.graph, complete_graph(3)).has_value());
  EXPECT_EQ(chromatic_number(art.graph), 3);
}

TEST(Counter1, RejectsSmallBudget) {
  EXPECT_THROW(construction_counter1(20, 2, 39), InvalidParameter);
  EXPECT_THROW(construction_counter1(20, 1, 40), InvalidParameter);
}

TEST(Counter1, InfeasibleRoundingRaisesConstructionError) {
  // s = f/2n = 10 leaves nothing for the V-classes.
  EXPECT_THROW(construction_counter1(10, 2, 200), ConstructionError);
}

TEST(Propcount1, SmallInstance) {
  const auto art = construction_propcount1(24, 2, 2, 48);
  EXPECT_EQ(art.params.at("s"), 1);
  EXPECT_EQ(art.graph.order(), 24);
  EXPECT_GE(edges_of(art), turan_edge_count(24, 2) - 48);
  EXPECT_EQ(chromatic_number(art.graph), 3);
}

TEST(Propcount1, SmallSubsetsAreColourable) {
  for (int layers = 1; layers <= 3; ++layers) {
    const auto art = construction_propcount1(14, 2, layers, 42);
    EXPECT_TRUE(small_subsets_colourable(art.graph, 2, layers + 1)) << layers;
    // The shortest odd cycle through all layers has 2N + 3 vertices.
    EXPECT_FALSE(small_subsets_colourable(art.graph, 2, 2 * layers + 3)) << layers;
  }
}

TEST(Qary, UnscaledParameters) {
  const auto art = construction_qary(64, 2, 256);
  EXPECT_EQ(art.params.at("u"), 4);
  EXPECT_EQ(art.params.at("q"), 3);
  EXPECT_EQ(art.params.at("block"), 5);
  EXPECT_EQ(art.cls("U").count(), 4);
  EXPECT_TRUE(qary_apex_pairs_separated(art));
  EXPECT_FALSE(contains_subgraph(art.graph, complete_graph(3)).has_value());
  // The exact deficiency is larger than the budget at these parameters.
  EXPECT_EQ(art.actual_deficiency, 340);
}

TEST(Qary, WithinBudgetCertifies) {
  for (int n : {32, 48, 64}) {
    const std::int64_t f = 4 * n;
    const auto art = qary_within_budget(n, 3, f);
    EXPECT_LE(art.actual_deficiency, f);
    EXPECT_TRUE(qary_apex_pairs_separated(art));
    EXPECT_FALSE(contains_subgraph(art.graph, mk_blowup(3, 1, 1, 2).graph).has_value()) << n;
  }
}

TEST(Qary, EmptyBlocksRaiseConstructionError) {
  EXPECT_THROW(construction_qary(8, 2, 16), ConstructionError);
}

TEST(Finish, DeficiencyCertificateFailureCarriesValue) {
  ConstructionArtifact art = turan_graph(6, 2);
  art.graph.remove_edge(0, 3);
  art.claimed_deficiency = 0;
  try {
    (void)detail::finish(art);
    FAIL() << "expected a construction error";
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.achieved_deficiency(), 1);
  }
}
