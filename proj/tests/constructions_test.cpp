#include "assort/constructions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "assort/enumeration.hpp"
#include "assort/generators.hpp"
#include "oracle.hpp"

using namespace assort;

namespace {

std::multiset<int> degree_multiset(const Graph& g) {
  return {g.degrees().begin(), g.degrees().end()};
}

std::multiset<std::pair<int, int>> edge_degree_pairs(const Graph& g) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& [u, v] : g.edges()) {
    int a = g.degree(u), b = g.degree(v);
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// subdivide
// ---------------------------------------------------------------------------

TEST(Subdivide, StarBecomesSpider) {
  Graph g = subdivide(family_star(4), 1);
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(degree_multiset(g), degree_multiset(family_spider(2, 2, 2)));
  EXPECT_EQ(stats(g).n, 0);
}

TEST(Subdivide, CycleStaysCycle) {
  Graph g = subdivide(family_cycle(3), 1);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.regular_degree(), 2);
  EXPECT_TRUE(g.is_connected());
}

TEST(Subdivide, StarK14Numerator) {
  EXPECT_EQ(stats(subdivide(family_star(5), 1)).n, -16);
}

TEST(Subdivide, PreservesOriginalDegrees) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = random_connected_graph(rng, 9);
    for (int s = 1; s <= 3; ++s) {
      Graph gs = subdivide(g, s);
      EXPECT_EQ(gs.order(), g.order() + s * g.edge_count());
      EXPECT_EQ(gs.edge_count(), (s + 1) * g.edge_count());
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(gs.degree(v), g.degree(v));
      for (int v = g.order(); v < gs.order(); ++v) EXPECT_EQ(gs.degree(v), 2);
    }
  }
}

TEST(Subdivide, RejectsBadArgs) {
  EXPECT_THROW(subdivide(family_path(3), 0), BadParams);
  EXPECT_THROW(subdivide(Graph::build(2, {}), 1), EmptyEdgeSet);
}

// Subdivision identity: the numerator of any s-subdivision equals
// -(S - 4m)^2 of the source, exactly.
TEST(SubdivideLaw, ExhaustiveSmallAndRandom) {
  for (int n = 2; n <= 5; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      AssortStats base = stats(g);
      Wide defect = base.s - 4 * Wide(base.m);
      for (int s = 1; s <= 3; ++s) {
        ASSERT_EQ(stats(subdivide(g, s)).n, -defect * defect);
      }
    });
  }
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = random_connected_graph(rng, 10);
    AssortStats base = stats(g);
    Wide defect = base.s - 4 * Wide(base.m);
    for (int s = 1; s <= 3; ++s) EXPECT_EQ(stats(subdivide(g, s)).n, -defect * defect);
  }
}

// ---------------------------------------------------------------------------
// single_edge_division
// ---------------------------------------------------------------------------

TEST(SingleEdgeDivision, SpiderCenterEdge) {
  Graph spider = family_spider(2, 2, 2);
  Graph g = single_edge_division(spider, EdgeRef::of(0, 1));
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.edge_count(), 7);
  EXPECT_EQ(stats(g).n, 0);
  EXPECT_EQ(degree_multiset(g), degree_multiset(family_spider(3, 2, 2)));
}

TEST(SingleEdgeDivision, PathGrows) {
  Graph g = single_edge_division(family_path(2), EdgeRef::of(0, 1));
  EXPECT_EQ(degree_multiset(g), degree_multiset(family_path(3)));
}

TEST(SingleEdgeDivision, TriangleToSquare) {
  Graph g = single_edge_division(family_cycle(3), EdgeRef::of(0, 1));
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.regular_degree(), 2);
}

TEST(SingleEdgeDivision, MissingEdgeRejected) {
  EXPECT_THROW(single_edge_division(family_path(3), EdgeRef::of(0, 2)), EdgeNotFound);
}

// ---------------------------------------------------------------------------
// triangle_op
// ---------------------------------------------------------------------------

TEST(TriangleOp, SpiderFrozenStats) {
  Graph g = triangle_op(family_spider(2, 2, 2));
  EXPECT_EQ(g.order(), 13);
  EXPECT_EQ(g.edge_count(), 18);
  AssortStats st = stats(g);
  EXPECT_EQ(st.p, 192);
  EXPECT_EQ(st.s, 120);
  EXPECT_EQ(st.n, -576);
}

TEST(TriangleOp, SingleEdgeMakesTriangle) {
  EXPECT_EQ(triangle_op(family_path(2)), family_cycle(3));
}

TEST(TriangleOp, TriangleFrozenStats) {
  Graph g = triangle_op(family_cycle(3));
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 9);
  AssortStats st = stats(g);
  EXPECT_EQ(st.n, -144);
  EXPECT_EQ(st.d, 288);
}

TEST(TriangleOp, DegreesDoubleAndFreshAreTwo) {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = random_connected_graph(rng, 9);
    Graph tg = triangle_op(g);
    EXPECT_EQ(tg.order(), g.order() + g.edge_count());
    EXPECT_EQ(tg.edge_count(), 3 * g.edge_count());
    for (int v = 0; v < g.order(); ++v) EXPECT_EQ(tg.degree(v), 2 * g.degree(v));
    for (int v = g.order(); v < tg.order(); ++v) EXPECT_EQ(tg.degree(v), 2);
  }
}

// Triangle-operation law: N(g^) = 12 N(g) - 4 (S - 2m)^2, exhaustively on
// small connected graphs.
TEST(TriangleOpLaw, ExhaustiveSmall) {
  for (int n = 2; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      AssortStats base = stats(g);
      Wide defect = base.s - 2 * Wide(base.m);
      ASSERT_EQ(stats(triangle_op(g)).n, 12 * base.n - 4 * defect * defect);
    });
  }
}

// ---------------------------------------------------------------------------
// leaf_connect
// ---------------------------------------------------------------------------

TEST(LeafConnect, TriangleFrozenStats) {
  Graph g = leaf_connect(family_cycle(3));
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.edge_count(), 12);
  AssortStats st = stats(g);
  EXPECT_EQ(st.p, 108);
  EXPECT_EQ(st.s, 72);
  EXPECT_EQ(st.n, 0);
  EXPECT_GT(st.d, 0);
  EXPECT_EQ(classify(st).tag, Tag::neutral);
}

TEST(LeafConnect, NeutralTreeStaysNeutral) {
  Graph g = leaf_connect(family_spider(2, 2, 2));
  EXPECT_EQ(g.order(), 19);
  EXPECT_EQ(g.edge_count(), 24);
  EXPECT_EQ(classify(g).tag, Tag::neutral);
}

TEST(LeafConnect, SingleEdgeMakesSquare) {
  Graph g = leaf_connect(family_path(2));
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.regular_degree(), 2);
  EXPECT_TRUE(g.is_connected());
}

TEST(LeafConnect, DegreeShape) {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = random_connected_graph(rng, 8);
    Graph dg = leaf_connect(g);
    EXPECT_EQ(dg.order(), g.order() + 2 * g.edge_count());
    EXPECT_EQ(dg.edge_count(), 4 * g.edge_count());
    for (int v = 0; v < g.order(); ++v) EXPECT_EQ(dg.degree(v), 2 * g.degree(v));
    for (int v = g.order(); v < dg.order(); ++v) EXPECT_EQ(dg.degree(v), 2);
  }
}

// The degree-pair multiset is independent of the leaf matching.
TEST(LeafConnect, PairingIndependence) {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = random_connected_graph(rng, 8);
    Graph a = leaf_connect(g, LeafPairing::creation_order);
    Graph b = leaf_connect(g, LeafPairing::reversed);
    EXPECT_EQ(edge_degree_pairs(a), edge_degree_pairs(b));
    EXPECT_EQ(stats(a).n, stats(b).n);
    EXPECT_EQ(stats(a).d, stats(b).d);
  }
}

// Leaf-connect scaling: N(g-dagger) = 16 N(g) exhaustively on all connected
// graphs of order <= 6 (order 7 runs in the acceptance suite).
TEST(LeafConnectLaw, ExhaustiveSmall) {
  for (int n = 2; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      ASSERT_EQ(stats(leaf_connect(g)).n, 16 * stats(g).n);
    });
  }
}

// ---------------------------------------------------------------------------
// ominus
// ---------------------------------------------------------------------------

TEST(Ominus, EdgeBecomesSquare) {
  Graph g = ominus(family_path(2));
  EXPECT_EQ(g, Graph::build(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(Ominus, PathP4KeepsCoefficient) {
  Graph g = ominus(family_path(4));
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.edge_count(), 12);
  Classification c = classify(g);
  EXPECT_EQ(c.tag, Tag::disassortative);
  EXPECT_EQ(*c.r, Rational::make(-1, 2));
}

TEST(Ominus, SpiderDoubleIsNeutralNonTree) {
  Graph g = ominus(family_spider(2, 2, 2));
  EXPECT_EQ(g.order(), 14);
  EXPECT_EQ(classify(g).tag, Tag::neutral);
  EXPECT_GE(g.edge_count(), g.order());
}

// Doubling scales both the numerator and the denominator by 64, hence the
// classification of any irregular graph is preserved exactly.
TEST(OminusLaw, ExhaustiveSmallAndRandom) {
  for (int n = 2; n <= 5; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      AssortStats base = stats(g);
      AssortStats dbl = stats(ominus(g));
      ASSERT_EQ(dbl.n, 64 * base.n);
      ASSERT_EQ(dbl.d, 64 * base.d);
    });
  }
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    Graph g = random_connected_graph(rng, 10);
    AssortStats base = stats(g);
    Graph d = ominus(g);
    AssortStats dbl = stats(d);
    EXPECT_EQ(dbl.n, 64 * base.n);
    EXPECT_EQ(dbl.d, 64 * base.d);
    for (int v = 0; v < g.order(); ++v) {
      EXPECT_EQ(d.degree(v), 2 * g.degree(v));
      EXPECT_EQ(d.degree(v + g.order()), 2 * g.degree(v));
    }
  }
}

// ---------------------------------------------------------------------------
// oplus
// ---------------------------------------------------------------------------

namespace {

Graph tadpole_c3_tail2() {
  // triangle 0,1,2 with pendant path 0-3-4
  return Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}});
}

}  // namespace

TEST(Oplus, PaperInstantiationIsInfeasible) {
  Graph g1 = leaf_connect(family_spider(2, 2, 2));  // 19 vertices, 24 edges
  ASSERT_EQ(g1.order(), 19);
  ASSERT_EQ(g1.edge_count(), 24);
  // alpha = 2 forces k = 2|E1|/|V1| = 48/19, which no integer spec satisfies
  Graph partner = family_circulant(19, {1, 2});
  EXPECT_THROW(oplus(g1, partner, OplusSpec{2, 2, 4}), SpecViolation);
  EXPECT_THROW(oplus(g1, partner, OplusSpec{2, 3, 4}), SpecViolation);
}

TEST(Oplus, MergeConditionViolationRejected) {
  Graph g1 = tadpole_c3_tail2();
  // beta = 3 breaks 2(alpha-1)|E1| = beta|V2| against the 5-cycle partner
  EXPECT_THROW(oplus(g1, family_cycle(5), OplusSpec{2, 3, 2}), SpecViolation);
}

TEST(Oplus, NotRegularRejected) {
  Graph g1 = tadpole_c3_tail2();
  EXPECT_THROW(oplus(g1, family_path(5), OplusSpec{2, 2, 2}), NotRegular);
}

TEST(Oplus, UnicyclicWitnessScalesNumerator) {
  Graph g1 = tadpole_c3_tail2();
  AssortStats base = stats(g1);
  ASSERT_EQ(base.n, -4);
  Graph g = oplus(g1, family_cycle(5), OplusSpec{2, 2, 2});
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.edge_count(), 3 * 5 + 5);
  AssortStats st = stats(g);
  EXPECT_EQ(st.n, 16 * base.n);  // alpha^4 = 16
  for (int v = 0; v < g1.order(); ++v) EXPECT_EQ(g.degree(v), 2 * g1.degree(v));
  for (int v = g1.order(); v < g.order(); ++v) EXPECT_EQ(g.degree(v), 2 + 2);
}

TEST(Oplus, NeutralWitnessStaysNeutral) {
  Graph g1 = leaf_connect(family_complete(4));  // neutral, 16 vertices, 24 edges
  ASSERT_EQ(classify(g1).tag, Tag::neutral);
  Graph partner = family_circulant(16, {1, 8});  // 3-regular
  Graph g = oplus(g1, partner, OplusSpec{2, 3, 3});
  EXPECT_EQ(g.order(), 32);
  EXPECT_EQ(g.edge_count(), 3 * 24 + 24);
  EXPECT_EQ(classify(g).tag, Tag::neutral);
  EXPECT_EQ(g.order() % 6, 2);
}

TEST(Oplus, AlphaThreeWitness) {
  Graph g1 = tadpole_c3_tail2();
  AssortStats base = stats(g1);
  Graph partner = family_circulant(10, {1, 2});  // 4-regular on 10 vertices
  Graph g = oplus(g1, partner, OplusSpec{3, 2, 4});
  EXPECT_EQ(g.order(), 15);
  AssortStats st = stats(g);
  EXPECT_EQ(st.n, 81 * base.n);  // alpha^4 = 81
}

TEST(OplusMatcher, InfeasiblePairingDetected) {
  // two left stubs on one vertex against two stubs of a single right vertex:
  // the second pairing would duplicate the first bridge
  EXPECT_THROW(detail::match_stubs({0, 0}, {5, 5}), MatchingInfeasible);
  EXPECT_THROW(detail::match_stubs({0}, {5, 5}), MatchingInfeasible);
  auto bridges = detail::match_stubs({0, 0, 1}, {5, 6, 5});
  EXPECT_EQ(bridges.size(), 3u);
  std::set<Edge> unique(bridges.begin(), bridges.end());
  EXPECT_EQ(unique.size(), 3u);
}

// ---------------------------------------------------------------------------
// Structural postconditions on random inputs
// ---------------------------------------------------------------------------

TEST(ConstructionShapes, ClosedFormsOnRandomInputs) {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 1000; ++iter) {
    Graph g = random_connected_graph(rng, 8);
    const auto n = g.order();
    const auto m = g.edge_count();
    EXPECT_EQ(subdivide(g, 2).order(), n + 2 * m);
    EXPECT_EQ(subdivide(g, 2).edge_count(), 3 * m);
    EXPECT_EQ(triangle_op(g).order(), n + m);
    EXPECT_EQ(triangle_op(g).edge_count(), 3 * m);
    EXPECT_EQ(leaf_connect(g).order(), n + 2 * m);
    EXPECT_EQ(leaf_connect(g).edge_count(), 4 * m);
    EXPECT_EQ(ominus(g).order(), 2 * n);
    EXPECT_EQ(ominus(g).edge_count(), 4 * m);
    Graph divided = single_edge_division(g, EdgeRef::of(g.edges()[0].first, g.edges()[0].second));
    EXPECT_EQ(divided.order(), n + 1);
    EXPECT_EQ(divided.edge_count(), m + 1);
  }
}
