#include "assort/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "assort/enumeration.hpp"
#include "assort/generators.hpp"

using namespace assort;

TEST(GraphBuild, TriangleNormalizes) {
  Graph g = Graph::build(3, {{1, 2}, {0, 1}, {2, 0}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(GraphBuild, RejectsDuplicateInEitherOrientation) {
  EXPECT_THROW(Graph::build(2, {{0, 1}, {1, 0}}), DuplicateEdge);
}

TEST(GraphBuild, RejectsLoop) {
  EXPECT_THROW(Graph::build(4, {{0, 0}}), LoopRejected);
}

TEST(GraphBuild, RejectsOutOfRange) {
  EXPECT_THROW(Graph::build(3, {{0, 3}}), VertexOutOfRange);
  EXPECT_THROW(Graph::build(3, {{-1, 2}}), VertexOutOfRange);
}

TEST(GraphBuild, RejectsNonpositiveOrder) {
  EXPECT_THROW(Graph::build(0, {}), BadParams);
}

TEST(GraphBuild, EqualityIsStructural) {
  Graph a = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph b = Graph::build(4, {{3, 2}, {2, 1}, {1, 0}});
  EXPECT_EQ(a, b);
  Graph c = Graph::build(4, {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_NE(a, c);
}

TEST(GraphConnectivity, PathIsConnected) {
  EXPECT_TRUE(family_path(4).is_connected());
}

TEST(GraphConnectivity, TwoComponents) {
  Graph g = Graph::build(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(g.is_connected());
}

TEST(GraphConnectivity, SingleVertexVacuouslyConnected) {
  EXPECT_TRUE(Graph::build(1, {}).is_connected());
}

TEST(GraphRegularity, CycleIsTwoRegular) {
  EXPECT_EQ(family_cycle(5).regular_degree(), 2);
}

TEST(GraphRegularity, StarIsNot) {
  EXPECT_FALSE(family_star(4).regular_degree().has_value());
}

TEST(GraphRegularity, CompleteK4) {
  EXPECT_EQ(family_complete(4).regular_degree(), 3);
}

TEST(GraphMaxDegree, SpiderCenter) {
  auto md = family_spider(2, 2, 2).max_degree();
  EXPECT_EQ(md.value, 3);
  EXPECT_EQ(md.count, 1);
}

TEST(GraphMaxDegree, CycleAllAttain) {
  auto md = family_cycle(6).max_degree();
  EXPECT_EQ(md.value, 2);
  EXPECT_EQ(md.count, 6);
}

TEST(GraphMaxDegree, StarK14) {
  auto md = family_star(5).max_degree();
  EXPECT_EQ(md.value, 4);
  EXPECT_EQ(md.count, 1);
}

TEST(GraphProperty, HandshakeOnRandomBuilds) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    std::uniform_int_distribution<int> pick(2, 16);
    int n = pick(rng);
    std::uniform_real_distribution<double> p(0.0, 1.0);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (p(rng) < 0.4) edges.emplace_back(u, v);
    Graph g = Graph::build(n, edges);
    long long total = 0;
    for (int v = 0; v < n; ++v) total += g.degree(v);
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST(GraphProperty, EqualityUnderPermutedInput) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    Graph g = random_connected_graph(rng, 9);
    std::vector<Edge> shuffled(g.edges());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& [u, v] : shuffled)
      if (rng() & 1) std::swap(u, v);
    EXPECT_EQ(Graph::build(g.order(), shuffled), g);
  }
}

TEST(GraphAdjacency, MatchesEdges) {
  Graph g = family_spider(1, 1, 3);
  auto adj = g.adjacency();
  for (int v = 0; v < g.order(); ++v) {
    int count = adj.offset[static_cast<std::size_t>(v) + 1] - adj.offset[static_cast<std::size_t>(v)];
    EXPECT_EQ(count, g.degree(v));
  }
}
