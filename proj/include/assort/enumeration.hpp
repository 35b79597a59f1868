#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "assort/assortativity.hpp"
#include "assort/graph.hpp"

namespace assort {

/// Bitmask over the C(n,2) vertex pairs in lexicographic order; bijective
/// with the labeled simple graphs of that order.  Capped at n <= 8 (28 bits).
struct EdgeMask {
  int order = 0;
  std::uint32_t mask = 0;
};

constexpr int kMaxMaskOrder = 8;
constexpr int kMaxTreeOrder = 12;

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Lexicographic pair table: (0,1),(0,2),...,(0,n-1),(1,2),...
inline std::vector<Edge> pair_table(int n) {
  std::vector<Edge> t;
  t.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) t.emplace_back(u, v);
  return t;
}

inline Graph mask_to_graph(const EdgeMask& em) {
  std::vector<Edge> edges;
  const std::vector<Edge> pairs = pair_table(em.order);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (em.mask >> i & 1u) edges.push_back(pairs[i]);
  return Graph::build(em.order, std::move(edges));
}

inline EdgeMask graph_to_mask(const Graph& g) {
  if (g.order() > kMaxMaskOrder) throw OrderUnsupported("edge masks support order <= 8");
  EdgeMask em{g.order(), 0};
  const std::vector<Edge> pairs = pair_table(g.order());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (g.has_edge(pairs[i].first, pairs[i].second)) em.mask |= 1u << i;
  return em;
}

namespace detail {

/// Per-vertex adjacency bitsets of a mask graph.
inline void mask_adjacency(std::uint32_t mask, const std::vector<Edge>& pairs,
                           std::array<std::uint16_t, kMaxMaskOrder>& adj) {
  adj.fill(0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1u) {
      adj[static_cast<std::size_t>(pairs[i].first)] |= static_cast<std::uint16_t>(1u << pairs[i].second);
      adj[static_cast<std::size_t>(pairs[i].second)] |= static_cast<std::uint16_t>(1u << pairs[i].first);
    }
  }
}

inline bool mask_connected(int n, const std::array<std::uint16_t, kMaxMaskOrder>& adj) {
  std::uint32_t reached = 1, frontier = 1;
  const std::uint32_t all = (1u << n) - 1;
  while (frontier) {
    std::uint32_t next = 0;
    std::uint32_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[static_cast<std::size_t>(v)];
    }
    frontier = next & ~reached;
    reached |= frontier;
  }
  return reached == all;
}

/// Aggregates needed by the exhaustive claim sweeps, computed straight from a
/// mask without materializing a Graph.
struct MaskStats {
  int m = 0;
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t q = 0;
  std::array<int, kMaxMaskOrder> degree{};
  std::int64_t num() const { return 4ll * m * p - s * s; }
  std::int64_t den() const { return 2ll * m * q - s * s; }
};

inline MaskStats mask_stats(std::uint32_t mask, const std::vector<Edge>& pairs) {
  MaskStats st;
  st.degree.fill(0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1u) {
      ++st.m;
      ++st.degree[static_cast<std::size_t>(pairs[i].first)];
      ++st.degree[static_cast<std::size_t>(pairs[i].second)];
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1u) {
      std::int64_t du = st.degree[static_cast<std::size_t>(pairs[i].first)];
      std::int64_t dv = st.degree[static_cast<std::size_t>(pairs[i].second)];
      st.p += du * dv;
      st.s += du + dv;
      st.q += du * du + dv * dv;
    }
  }
  return st;
}

}  // namespace detail

/// Visits every labeled simple connected graph on n vertices exactly once, in
/// ascending mask order.  The callback receives the EdgeMask.
template <class F>
void for_each_connected_mask(int n, F&& fn) {
  if (n < 2 || n > kMaxMaskOrder)
    throw OrderUnsupported("connected enumeration supports 2 <= n <= 8");
  const std::vector<Edge> pairs = pair_table(n);
  const std::uint64_t limit = 1ull << pairs.size();
  std::array<std::uint16_t, kMaxMaskOrder> adj{};
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    detail::mask_adjacency(static_cast<std::uint32_t>(mask), pairs, adj);
    if (detail::mask_connected(n, adj)) fn(EdgeMask{n, static_cast<std::uint32_t>(mask)});
  }
}

/// Convenience wrapper materializing a Graph per connected mask.
template <class F>
void for_each_connected_graph(int n, F&& fn) {
  for_each_connected_mask(n, [&](const EdgeMask& em) { fn(mask_to_graph(em)); });
}

inline std::int64_t connected_count(int n) {
  std::int64_t count = 0;
  for_each_connected_mask(n, [&](const EdgeMask&) { ++count; });
  return count;
}

/// Cayley-bijection code: n-2 vertex ids, each in [0, n).
struct PruferCode {
  std::vector<int> seq;
  int order() const { return static_cast<int>(seq.size()) + 2; }
};

namespace detail {

/// Linear-time Prufer decode into preallocated buffers.  degree[] must hold
/// 1 + multiplicity of each id in the code on entry; edges are emitted
/// unnormalized.
inline void prufer_decode_into(const int* code, int n, int* degree, Edge* edges) {
  const int len = n - 2;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < len; ++i) {
    const int c = code[i];
    edges[i] = Edge{leaf, c};
    --degree[leaf];
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges[len] = Edge{leaf, n - 1};
}

}  // namespace detail

inline Graph prufer_decode(const PruferCode& code) {
  const int n = code.order();
  for (int c : code.seq)
    if (c < 0 || c >= n) throw BadCode("code id " + std::to_string(c) + " outside [0," + std::to_string(n) + ")");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code.seq) ++degree[static_cast<std::size_t>(c)];
  std::vector<Edge> edges(static_cast<std::size_t>(n) - 1);
  detail::prufer_decode_into(code.seq.data(), n, degree.data(), edges.data());
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  return Graph::build(n, std::move(edges));
}

/// Visits every labeled tree on n vertices (n^(n-2) of them) in ascending
/// code order.  The callback receives (edges, edge count, degrees); buffers
/// are reused between calls and edges are unnormalized.
template <class F>
void for_each_labeled_tree(int n, F&& fn) {
  if (n < 2 || n > kMaxTreeOrder) throw OrderUnsupported("tree enumeration supports 2 <= n <= 12");
  if (n == 2) {
    Edge e{0, 1};
    int deg[2] = {1, 1};
    fn(&e, 1, deg);
    return;
  }
  const int len = n - 2;
  std::vector<int> code(static_cast<std::size_t>(len), 0);
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<Edge> edges(static_cast<std::size_t>(n) - 1);
  for (;;) {
    for (int i = 0; i < n; ++i) degree[static_cast<std::size_t>(i)] = 1;
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    int* deg = degree.data();
    detail::prufer_decode_into(code.data(), n, deg, edges.data());
    // decode consumed the degree array; rebuild the true degrees for the callback
    for (int i = 0; i < n; ++i) deg[i] = 1;
    for (int c : code) ++deg[c];
    fn(edges.data(), n - 1, deg);
    int i = len - 1;
    while (i >= 0 && code[static_cast<std::size_t>(i)] == n - 1) code[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++code[static_cast<std::size_t>(i)];
  }
}

/// Minimum adjacency mask over all vertex relabelings; canonical form for
/// isomorphism tests at desk scale (n <= 8).
inline std::uint32_t canonical_mask(const Graph& g) {
  const int n = g.order();
  if (n > kMaxMaskOrder) throw OrderUnsupported("canonical masks support order <= 8");
  const std::vector<Edge> pairs = pair_table(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      int u = perm[static_cast<std::size_t>(pairs[i].first)];
      int v = perm[static_cast<std::size_t>(pairs[i].second)];
      if (g.has_edge(u, v)) mask |= 1u << i;
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Canonical string of a tree (rooted encoding minimized over the 1-2 center
/// choices); linear-time isomorphism key for tree families up to order 12.
inline std::string tree_canonical(const Graph& g) {
  const int n = g.order();
  if (g.edge_count() != n - 1) throw BadParams("tree_canonical requires a tree");
  if (n == 1) return "()";
  Graph::Adjacency adj = g.adjacency();
  // centers by leaf stripping
  std::vector<int> degree(g.degrees());
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  int remaining = n;
  std::vector<int> centers(layer);
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int i = adj.offset[static_cast<std::size_t>(v)]; i < adj.offset[static_cast<std::size_t>(v) + 1]; ++i) {
        int w = adj.list[static_cast<std::size_t>(i)];
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
      degree[static_cast<std::size_t>(v)] = 0;
    }
    layer = std::move(next);
    centers = layer;
  }

  auto encode_from = [&](int root) {
    std::string out;
    // iterative post-order with child-encoding sort
    struct Frame {
      int v;
      int parent;
      int next;
      std::vector<std::string> children;
    };
    std::vector<Frame> stack;
    stack.push_back({root, -1, adj.offset[static_cast<std::size_t>(root)], {}});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj.offset[static_cast<std::size_t>(f.v) + 1]) {
        int w = adj.list[static_cast<std::size_t>(f.next++)];
        if (w != f.parent) stack.push_back({w, f.v, adj.offset[static_cast<std::size_t>(w)], {}});
      } else {
        std::sort(f.children.begin(), f.children.end());
        std::string enc = "(";
        for (const auto& c : f.children) enc += c;
        enc += ")";
        stack.pop_back();
        if (stack.empty())
          out = enc;
        else
          stack.back().children.push_back(std::move(enc));
      }
    }
    return out;
  };

  std::string best;
  for (int c : centers) {
    std::string enc = encode_from(c);
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

enum class Family { all_connected, trees };

/// Exhaustive neutral-graph sweep.  Representatives are one labeled graph per
/// isomorphism class together with the number of labeled copies found.
struct NeutralSweep {
  std::vector<Graph> reps;
  std::vector<std::int64_t> rep_labeled_counts;
  std::int64_t labeled_total = 0;
  std::int64_t family_size = 0;
};

inline NeutralSweep find_neutral(int n, Family family) {
  NeutralSweep out;
  if (family == Family::all_connected) {
    if (n < 2 || n > kMaxMaskOrder)
      throw OrderUnsupported("all-connected neutral sweep supports 2 <= n <= 8");
    const std::vector<Edge> pairs = pair_table(n);
    std::map<std::uint32_t, std::size_t> classes;
    for_each_connected_mask(n, [&](const EdgeMask& em) {
      ++out.family_size;
      detail::MaskStats st = detail::mask_stats(em.mask, pairs);
      if (st.num() == 0 && st.den() > 0) {
        ++out.labeled_total;
        Graph g = mask_to_graph(em);
        std::uint32_t key = canonical_mask(g);
        auto [it, fresh] = classes.try_emplace(key, out.reps.size());
        if (fresh) {
          out.reps.push_back(std::move(g));
          out.rep_labeled_counts.push_back(1);
        } else {
          ++out.rep_labeled_counts[it->second];
        }
      }
    });
    return out;
  }
  if (n < 2 || n > kMaxTreeOrder) throw OrderUnsupported("tree neutral sweep supports 2 <= n <= 12");
  std::map<std::string, std::size_t> classes;
  for_each_labeled_tree(n, [&](const Edge* edges, int m, const int* degree) {
    ++out.family_size;
    std::int64_t p = 0, s = 0, q = 0;
    for (int i = 0; i < m; ++i) {
      std::int64_t du = degree[edges[i].first];
      std::int64_t dv = degree[edges[i].second];
      p += du * dv;
      s += du + dv;
      q += du * du + dv * dv;
    }
    std::int64_t num = 4ll * m * p - s * s;
    std::int64_t den = 2ll * m * q - s * s;
    if (num == 0 && den > 0) {
      ++out.labeled_total;
      std::vector<Edge> es(edges, edges + m);
      for (auto& [u, v] : es)
        if (u > v) std::swap(u, v);
      Graph g = Graph::build(n, std::move(es));
      std::string key = tree_canonical(g);
      auto [it, fresh] = classes.try_emplace(key, out.reps.size());
      if (fresh) {
        out.reps.push_back(std::move(g));
        out.rep_labeled_counts.push_back(1);
      } else {
        ++out.rep_labeled_counts[it->second];
      }
    }
  });
  return out;
}

/// FNV-1a accumulator for corpus fingerprints.
struct Fnv64 {
  std::uint64_t h = 1469598103934665603ull;
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  void add(const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
};

/// Seeded Erdos-Renyi-style graph; used for the randomized corpora.  The
/// result is a function of the rng state alone.
inline Graph random_graph(std::mt19937_64& rng, int order, double edge_prob) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng) < edge_prob) edges.emplace_back(u, v);
  return Graph::build(order, std::move(edges));
}

/// Rejection-samples a connected graph with 2 <= order <= max_order.
inline Graph random_connected_graph(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> pick_order(2, max_order);
  std::uniform_real_distribution<double> pick_p(0.25, 0.75);
  for (;;) {
    int n = pick_order(rng);
    Graph g = random_graph(rng, n, pick_p(rng));
    if (g.edge_count() >= 1 && g.is_connected()) return g;
  }
}

}  // namespace assort
