#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "assort/assortativity.hpp"
#include "assort/graph.hpp"

namespace assort {

/// Replaces every edge uv by a path u, w_1..w_s, v of s fresh degree-2
/// vertices.  Originals keep their ids; the fresh vertices of edge number e
/// (in sorted edge order) are n + e*s .. n + e*s + s - 1.
inline Graph subdivide(const Graph& g, int s) {
  if (s < 1) throw BadParams("subdivision count must be >= 1");
  if (g.edge_count() == 0) throw EmptyEdgeSet("subdivide requires at least one edge");
  const int n = g.order();
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()) * (static_cast<std::size_t>(s) + 1));
  int next = n;
  for (const auto& [u, v] : g.edges()) {
    int prev = u;
    for (int i = 0; i < s; ++i) {
      out.push_back(make_edge(prev, next));
      prev = next++;
    }
    out.push_back(make_edge(prev, v));
  }
  return Graph::build(n + s * static_cast<int>(g.edge_count()), std::move(out));
}

/// Replaces the chosen edge uv by u-w-v with one fresh vertex w = n.
inline Graph single_edge_division(const Graph& g, const EdgeRef& e) {
  if (!g.has_edge(e))
    throw EdgeNotFound("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
  const int n = g.order();
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()) + 1);
  for (const auto& [u, v] : g.edges()) {
    if (u == e.u && v == e.v) {
      out.push_back(make_edge(u, n));
      out.push_back(make_edge(n, v));
    } else {
      out.emplace_back(u, v);
    }
  }
  return Graph::build(n + 1, std::move(out));
}

/// For every edge uv adds one fresh vertex adjacent to both u and v, keeping
/// the original edge.  Fresh vertex of edge number e is n + e.
inline Graph triangle_op(const Graph& g) {
  if (g.edge_count() == 0) throw EmptyEdgeSet("triangle_op requires at least one edge");
  const int n = g.order();
  std::vector<Edge> out(g.edges());
  out.reserve(out.size() * 3);
  int next = n;
  for (const auto& [u, v] : g.edges()) {
    out.push_back(make_edge(u, next));
    out.push_back(make_edge(v, next));
    ++next;
  }
  return Graph::build(n + static_cast<int>(g.edge_count()), std::move(out));
}

/// Pairing rule for the fresh leaves of leaf_connect.  The degree pair
/// multiset of the result is the same for every perfect matching of the
/// leaves, so the choice only affects labeling.
enum class LeafPairing { creation_order, reversed };

/// Attaches d_v fresh vertices to every vertex v, then adds a perfect
/// matching on the 2m fresh vertices.  Fresh leaves are created in vertex
/// order (ids n, n+1, ...) and matched pairwise: leaf 2i with leaf 2i+1 under
/// creation_order, or i-th from the front with i-th from the back under
/// reversed.
inline Graph leaf_connect(const Graph& g, LeafPairing pairing = LeafPairing::creation_order) {
  if (g.edge_count() == 0) throw EmptyEdgeSet("leaf_connect requires at least one edge");
  const int n = g.order();
  std::vector<Edge> out(g.edges());
  std::vector<int> fresh;
  fresh.reserve(2 * static_cast<std::size_t>(g.edge_count()));
  int next = n;
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < g.degree(v); ++i) {
      out.push_back(make_edge(v, next));
      fresh.push_back(next++);
    }
  }
  const std::size_t f = fresh.size();
  if (pairing == LeafPairing::creation_order) {
    for (std::size_t i = 0; i + 1 < f; i += 2) out.push_back(make_edge(fresh[i], fresh[i + 1]));
  } else {
    for (std::size_t i = 0; i < f / 2; ++i) out.push_back(make_edge(fresh[i], fresh[f - 1 - i]));
  }
  return Graph::build(n + static_cast<int>(f), std::move(out));
}

/// Parameters of the stub-merging gluing of a graph with a k-regular partner:
/// alpha-1 stubs per endvertex per incident edge on the first graph, beta
/// stubs per vertex of the second.  Feasibility requires the exact ratio
/// conditions checked in oplus().
struct OplusSpec {
  std::int64_t alpha = 2;
  std::int64_t beta = 1;
  std::int64_t k = 0;
};

namespace detail {

/// Pairs the two stub lists in order; a pairing that would repeat an
/// already-made bridge is skipped and retried with the next free stub.
/// Returns the bridge list or throws MatchingInfeasible.
inline std::vector<Edge> match_stubs(const std::vector<Vertex>& left, const std::vector<Vertex>& right) {
  if (left.size() != right.size()) throw MatchingInfeasible("stub counts differ");
  std::set<Edge> made;
  std::vector<Edge> bridges;
  bridges.reserve(left.size());
  std::vector<char> used(right.size(), 0);
  std::size_t head = 0;
  for (Vertex u : left) {
    bool matched = false;
    for (std::size_t j = head; j < right.size(); ++j) {
      if (used[j]) continue;
      Edge b{u, right[j]};
      if (made.count(b)) continue;
      made.insert(b);
      bridges.push_back(b);
      used[j] = 1;
      if (j == head) {
        ++head;
        while (head < right.size() && used[head]) ++head;
      }
      matched = true;
      break;
    }
    if (!matched) throw MatchingInfeasible("no duplicate-free stub pairing after full pass");
  }
  return bridges;
}

}  // namespace detail

/// Glues g1 with a k-regular g2 by merging stubs into bridge edges.  Vertices
/// of g1 keep their ids, vertices of g2 follow at n1..n1+n2-1.  Stubs of g1
/// are enumerated by (vertex id, incident-edge rank), stubs of g2 by
/// (vertex id, stub rank), and paired round-robin.
inline Graph oplus(const Graph& g1, const Graph& g2, const OplusSpec& spec) {
  if (g1.edge_count() == 0) throw EmptyEdgeSet("oplus requires a first graph with at least one edge");
  if (!g1.is_connected()) throw Disconnected("oplus requires a connected first graph");
  if (spec.alpha < 2) throw SpecViolation("alpha must be at least 2");
  if (spec.beta < 1) throw SpecViolation("beta must be at least 1");
  auto reg = g2.regular_degree();
  if (!reg || *reg != spec.k)
    throw NotRegular("second graph is not " + std::to_string(spec.k) + "-regular");

  const std::int64_t n1 = g1.order(), m1 = g1.edge_count();
  const std::int64_t n2 = g2.order(), m2 = g2.edge_count();
  const std::int64_t a1 = spec.alpha - 1;
  if (2 * a1 * m1 != spec.beta * n2)
    throw SpecViolation("stub merge condition 2(alpha-1)|E1| = beta|V2| fails");
  if (m2 != a1 * a1 * m1)
    throw SpecViolation("ratio condition |E2| = (alpha-1)^2 |E1| fails");
  if (spec.k != spec.beta * a1)
    throw SpecViolation("ratio condition k = beta(alpha-1) fails");
  if (n2 != a1 * n1)
    throw SpecViolation("ratio condition |V2| = (alpha-1)|V1| fails");

  std::vector<Vertex> left;
  left.reserve(static_cast<std::size_t>(2 * a1 * m1));
  Graph::Adjacency adj = g1.adjacency();
  for (Vertex u = 0; u < g1.order(); ++u) {
    int incident = adj.offset[static_cast<std::size_t>(u) + 1] - adj.offset[static_cast<std::size_t>(u)];
    for (int e = 0; e < incident; ++e)
      for (std::int64_t t = 0; t < a1; ++t) left.push_back(u);
  }
  std::vector<Vertex> right;
  right.reserve(static_cast<std::size_t>(spec.beta * n2));
  for (Vertex w = 0; w < g2.order(); ++w)
    for (std::int64_t t = 0; t < spec.beta; ++t) right.push_back(static_cast<Vertex>(n1) + w);

  std::vector<Edge> out(g1.edges());
  for (const auto& [u, v] : g2.edges())
    out.push_back(make_edge(static_cast<Vertex>(n1) + u, static_cast<Vertex>(n1) + v));
  for (const Edge& b : detail::match_stubs(left, right)) out.push_back(b);
  return Graph::build(static_cast<int>(n1 + n2), std::move(out));
}

/// Doubles the graph: vertices u and peers u° = u+n, edges uv and u°v° for
/// every edge, plus cross edges u-v° and v-u°.  Every degree doubles and the
/// edge count quadruples.
inline Graph ominus(const Graph& g) {
  if (g.edge_count() == 0) throw EmptyEdgeSet("ominus requires at least one edge");
  const int n = g.order();
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()) * 4);
  for (const auto& [u, v] : g.edges()) {
    out.push_back(make_edge(u, v));
    out.push_back(make_edge(u + n, v + n));
    out.push_back(make_edge(u, v + n));
    out.push_back(make_edge(v, u + n));
  }
  return Graph::build(2 * n, std::move(out));
}

}  // namespace assort
