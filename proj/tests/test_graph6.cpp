#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "xstab/constructions.hpp"
#include "xstab/errors.hpp"
#include "xstab/graph6.hpp"

using namespace xstab;

TEST(Graph6, BaseCases) {
  EXPECT_EQ(graph6_encode(Graph(0)), "?");
  EXPECT_EQ(graph6_encode(Graph(1)), "@");
  EXPECT_EQ(graph6_decode("@").order(), 1);
}

TEST(Graph6, FormatDescriptionExample) {
  // Five vertices, edges 0-2, 0-4, 1-3, 3-4.
  const Graph g = Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
  EXPECT_EQ(graph6_encode(g), "DQc");
  EXPECT_EQ(graph6_decode("DQc"), g);
}

TEST(Graph6, KnownGraphs) {
  EXPECT_EQ(graph6_encode(cycle_graph(5)), "Dhc");
  EXPECT_EQ(graph6_encode(complete_graph(4)), "C~");
  EXPECT_EQ(graph6_decode(graph6_encode(cycle_graph(5))), cycle_graph(5));
}

TEST(Graph6, HeaderAndNewlineAccepted) {
  EXPECT_EQ(graph6_decode(">>graph6<<Dhc\n"), cycle_graph(5));
}

TEST(Graph6, RandomRoundTripsMatchReferenceEncoder) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) {
    const int n = static_cast<int>(rng() % 21);
    const Graph g = oracle::random_graph(n, 0.45, rng);
    const std::string text = graph6_encode(g);
    ASSERT_EQ(text, oracle::graph6(g));
    ASSERT_EQ(graph6_decode(text), g);
    ASSERT_EQ(graph6_encode(graph6_decode(text)), text);
  }
}

TEST(Graph6, LongFormOrder) {
  std::mt19937_64 rng(7);
  for (int n : {62, 63, 64, 100, 300}) {
    const Graph g = oracle::random_graph(n, 0.1, rng);
    const std::string text = graph6_encode(g);
    EXPECT_EQ(text, oracle::graph6(g));
    EXPECT_EQ(graph6_decode(text), g);
  }
}

TEST(Graph6, MalformedInputNamesOffset) {
  try {
    graph6_decode("D!c");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
  try {
    graph6_decode("Dh");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  EXPECT_THROW(graph6_decode(""), ParseError);
  EXPECT_THROW(graph6_decode("Dhcc"), ParseError);
  // n = 2 uses one bit of the byte; the padding must be zero.
  EXPECT_THROW(graph6_decode("A`"), ParseError);
}
