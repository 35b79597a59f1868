#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "assort/errors.hpp"

namespace assort {

using Vertex = int;
/// Unordered vertex pair stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  if (u == v) throw LoopRejected("self-loop on vertex " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Reference to an edge of a specific graph, endpoints normalized u < v.
struct EdgeRef {
  Vertex u = 0;
  Vertex v = 0;

  static EdgeRef of(Vertex a, Vertex b) {
    Edge e = make_edge(a, b);
    return EdgeRef{e.first, e.second};
  }

  bool operator==(const EdgeRef&) const = default;
};

/// Immutable simple undirected graph on densely labeled vertices 0..n-1.
/// The edge list is kept sorted lexicographically, so two graphs compare
/// equal exactly when they have the same order and the same edge set.
class Graph {
 public:
  /// Validates and normalizes the input.  Rejects self-loops, duplicate
  /// edges (in either orientation) and endpoints outside [0, order).
  static Graph build(int order, std::vector<Edge> edges) {
    if (order < 1) throw BadParams("graph order must be at least 1");
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= order || v < 0 || v >= order)
        throw VertexOutOfRange("edge endpoint outside [0, " + std::to_string(order) + ")");
      if (u == v) throw LoopRejected("self-loop on vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw DuplicateEdge("duplicate edge (" + std::to_string(dup->first) + "," +
                          std::to_string(dup->second) + ")");
    return Graph(order, std::move(edges));
  }

  int order() const { return order_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(Vertex v) const { return degrees_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const { return degrees_; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  bool has_edge(const EdgeRef& e) const { return has_edge(e.u, e.v); }

  /// Adjacency in CSR form: neighbors(v) = adj[offset[v]..offset[v+1]).
  struct Adjacency {
    std::vector<int> offset;
    std::vector<Vertex> list;
  };

  Adjacency adjacency() const {
    Adjacency a;
    a.offset.assign(static_cast<std::size_t>(order_) + 1, 0);
    for (const auto& [u, v] : edges_) {
      ++a.offset[static_cast<std::size_t>(u) + 1];
      ++a.offset[static_cast<std::size_t>(v) + 1];
    }
    for (std::size_t i = 1; i < a.offset.size(); ++i) a.offset[i] += a.offset[i - 1];
    a.list.resize(2 * edges_.size());
    std::vector<int> cursor(a.offset.begin(), a.offset.end() - 1);
    for (const auto& [u, v] : edges_) {
      a.list[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
      a.list[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
    }
    return a;
  }

  /// True when a single traversal component covers every vertex.
  bool is_connected() const {
    if (order_ == 1) return true;
    Adjacency a = adjacency();
    std::vector<char> seen(static_cast<std::size_t>(order_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (int i = a.offset[static_cast<std::size_t>(v)]; i < a.offset[static_cast<std::size_t>(v) + 1]; ++i) {
        Vertex w = a.list[static_cast<std::size_t>(i)];
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++visited;
          stack.push_back(w);
        }
      }
    }
    return visited == order_;
  }

  /// k when every vertex has degree k, absent otherwise.
  std::optional<int> regular_degree() const {
    int k = degrees_[0];
    for (int d : degrees_)
      if (d != k) return std::nullopt;
    return k;
  }

  struct MaxDegree {
    int value = 0;
    int count = 0;  // vertices attaining the maximum
  };

  MaxDegree max_degree() const {
    MaxDegree md;
    for (int d : degrees_) {
      if (d > md.value) {
        md.value = d;
        md.count = 1;
      } else if (d == md.value) {
        ++md.count;
      }
    }
    return md;
  }

  bool is_tree() const { return edge_count() == order_ - 1 && is_connected(); }

  bool operator==(const Graph&) const = default;

 private:
  Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
    degrees_.assign(static_cast<std::size_t>(order_), 0);
    for (const auto& [u, v] : edges_) {
      ++degrees_[static_cast<std::size_t>(u)];
      ++degrees_[static_cast<std::size_t>(v)];
    }
  }

  int order_;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
};

}  // namespace assort
