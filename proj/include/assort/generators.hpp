#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "assort/assortativity.hpp"
#include "assort/constructions.hpp"
#include "assort/graph.hpp"
#include "assort/graph6.hpp"

namespace assort {

// ---------------------------------------------------------------------------
// Parameterized families
// ---------------------------------------------------------------------------

inline Graph family_path(int n) {
  if (n < 1) throw BadParams("path needs order >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, std::move(edges));
}

inline Graph family_cycle(int n) {
  if (n < 3) throw BadParams("cycle needs order >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return Graph::build(n, std::move(edges));
}

/// Star on n vertices total: center 0 with n-1 pendant vertices.
inline Graph family_star(int n) {
  if (n < 2) throw BadParams("star needs order >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::build(n, std::move(edges));
}

inline Graph family_complete(int n) {
  if (n < 1) throw BadParams("complete graph needs order >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, std::move(edges));
}

/// Circulant graph: vertex v adjacent to v +- o (mod n) for each offset.
/// Offsets must be distinct in [1, n/2] and generate a connected, simple,
/// regular graph.
inline Graph family_circulant(int n, std::vector<int> offsets) {
  if (n < 3) throw BadParams("circulant needs order >= 3");
  if (offsets.empty()) throw BadParams("circulant needs at least one offset");
  std::set<int> distinct;
  int g = n;
  for (int o : offsets) {
    if (o < 1 || o > n / 2) throw BadParams("circulant offset outside [1, n/2]");
    if (!distinct.insert(o).second) throw BadParams("repeated circulant offset");
    g = std::gcd(g, o);
  }
  if (g != 1) throw BadParams("circulant offsets do not generate a connected graph");
  std::set<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int o : offsets) edges.insert(make_edge(v, (v + o) % n));
  Graph out = Graph::build(n, std::vector<Edge>(edges.begin(), edges.end()));
  if (!out.regular_degree()) throw BadParams("circulant parameters are not regular");
  return out;
}

/// 3-spider: center of degree 3 with three pendant paths (legs) of the given
/// lengths.  Center is vertex 0; legs are appended in argument order.
inline Graph family_spider(int leg1, int leg2, int leg3) {
  if (leg1 < 1 || leg2 < 1 || leg3 < 1) throw BadParams("spider legs must have length >= 1");
  std::vector<Edge> edges;
  int next = 1;
  for (int len : {leg1, leg2, leg3}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back(make_edge(prev, next));
      prev = next++;
    }
  }
  return Graph::build(next, std::move(edges));
}

/// CLI-facing dispatcher.
inline Graph family(const std::string& name, const std::vector<std::int64_t>& params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw BadParams("family " + name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "path") {
    arity(1);
    return family_path(static_cast<int>(params[0]));
  }
  if (name == "cycle") {
    arity(1);
    return family_cycle(static_cast<int>(params[0]));
  }
  if (name == "star") {
    arity(1);
    return family_star(static_cast<int>(params[0]));
  }
  if (name == "complete") {
    arity(1);
    return family_complete(static_cast<int>(params[0]));
  }
  if (name == "spider") {
    arity(3);
    return family_spider(static_cast<int>(params[0]), static_cast<int>(params[1]),
                         static_cast<int>(params[2]));
  }
  if (name == "circulant") {
    if (params.size() < 2) throw BadParams("circulant expects n followed by offsets");
    std::vector<int> offsets(params.begin() + 1, params.end());
    return family_circulant(static_cast<int>(params[0]), std::move(offsets));
  }
  throw BadParams("unknown family " + name);
}

// ---------------------------------------------------------------------------
// Certified neutral generators
// ---------------------------------------------------------------------------

struct RecipeStep {
  std::string op;
  std::vector<std::int64_t> args;
};

/// Declarative construction route for a target-order neutral graph, with the
/// claim ids the route relies on.
struct RecipePlan {
  enum class Kind { tree, non_tree };
  int target_order = 0;
  Kind kind = Kind::tree;
  std::vector<RecipeStep> route;
  std::vector<std::string> provenance;

  std::string describe() const {
    std::string out;
    for (std::size_t i = 0; i < route.size(); ++i) {
      if (i) out += " | ";
      out += route[i].op;
      out += "(";
      for (std::size_t j = 0; j < route[i].args.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(route[i].args[j]);
      }
      out += ")";
    }
    return out;
  }
};

namespace detail {

inline bool certified_neutral(const Graph& g) {
  AssortStats st = stats(g);
  return st.n == 0 && st.d > 0;
}

}  // namespace detail

/// Canonical neutral tree of each feasible order: the 3-spider with legs
/// (2, 2, N-5).  Certified exactly before being returned.
inline Graph neutral_tree(int target_order) {
  if (target_order <= 6)
    throw OrderTooSmall("no neutral graph of order <= 6 exists; smallest neutral tree has order 7");
  Graph g = family_spider(2, 2, target_order - 5);
  if (!detail::certified_neutral(g)) throw Error("internal: spider certification failed");
  return g;
}

// ---------------------------------------------------------------------------
// Fallback search families (deterministic, bounded)
//
// Orders not reachable by the closed-form routes are searched over decorated
// small skeletons, each candidate tested exactly:
//   family 1: cycle with up to three pendant paths,
//   family 2: theta graphs (two degree-3 hubs joined by three paths) and
//             dumbbells (two cycles joined by a path), up to three pendants,
//   family 3: subdivisions of K4, up to four pendants.
// Attachment points run over a canonical slot set per chain (ends, seconds,
// middle); pendant lengths beyond 2 shift only the count of degree-2-to-
// degree-2 edges, which the skeleton absorbs, so the slot classes cover every
// attainable degree-pair profile of the family.
// ---------------------------------------------------------------------------

namespace detail {

struct Skeleton {
  int order = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> segments;  // degree-2 chain vertex ids, in chain order
};

inline Skeleton cycle_skeleton(int g) {
  Skeleton s;
  s.order = g;
  for (int v = 0; v < g; ++v) s.edges.push_back(make_edge(v, (v + 1) % g));
  s.segments.emplace_back();
  for (int v = 0; v < g; ++v) s.segments.back().push_back(v);
  return s;
}

/// Theta graph: hubs 0 and 1 joined by three internally disjoint paths of
/// lengths a <= b <= c (a may be 1, giving a hub-hub edge).
inline Skeleton theta_skeleton(int a, int b, int c) {
  Skeleton s;
  s.order = 2;
  auto add_path = [&](int len) {
    std::vector<int> internals;
    if (len == 1) {
      s.edges.push_back(make_edge(0, 1));
    } else {
      int prev = 0;
      for (int i = 0; i + 1 < len; ++i) {
        int w = s.order++;
        internals.push_back(w);
        s.edges.push_back(make_edge(prev, w));
        prev = w;
      }
      s.edges.push_back(make_edge(prev, 1));
    }
    s.segments.push_back(std::move(internals));
  };
  add_path(a);
  add_path(b);
  add_path(c);
  return s;
}

/// Dumbbell: cycles of girth g1 and g2 whose hubs are joined by a path of
/// length br (br = 1 makes the hubs adjacent).
inline Skeleton dumbbell_skeleton(int g1, int g2, int br) {
  Skeleton s;
  s.order = 0;
  auto add_cycle = [&](int g) {
    int hub = s.order;
    std::vector<int> internals;
    for (int i = 0; i < g; ++i) {
      if (i > 0) internals.push_back(hub + i);
      s.edges.push_back(make_edge(hub + i, hub + (i + 1) % g));
    }
    s.order += g;
    s.segments.push_back(std::move(internals));
    return hub;
  };
  int h1 = add_cycle(g1);
  int h2 = add_cycle(g2);
  std::vector<int> bridge;
  int prev = h1;
  for (int i = 0; i + 1 < br; ++i) {
    int w = s.order++;
    bridge.push_back(w);
    s.edges.push_back(make_edge(prev, w));
    prev = w;
  }
  s.edges.push_back(make_edge(prev, h2));
  s.segments.push_back(std::move(bridge));
  return s;
}

/// Homeomorph of K4: branch vertices 0..3, edge j of the fixed edge order
/// subdivided into a chain of subs[j] internal vertices.
inline Skeleton k4_skeleton(const std::array<int, 6>& subs) {
  static const std::array<Edge, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  Skeleton s;
  s.order = 4;
  for (int j = 0; j < 6; ++j) {
    std::vector<int> internals;
    int prev = kEdges[static_cast<std::size_t>(j)].first;
    for (int i = 0; i < subs[static_cast<std::size_t>(j)]; ++i) {
      int w = s.order++;
      internals.push_back(w);
      s.edges.push_back(make_edge(prev, w));
      prev = w;
    }
    s.edges.push_back(make_edge(prev, kEdges[static_cast<std::size_t>(j)].second));
    s.segments.push_back(std::move(internals));
  }
  return s;
}

struct Pendant {
  int at = 0;
  int len = 1;
};

inline Graph decorate(const Skeleton& skel, const std::vector<Pendant>& pendants) {
  std::vector<Edge> edges(skel.edges);
  int next = skel.order;
  for (const Pendant& p : pendants) {
    int prev = p.at;
    for (int i = 0; i < p.len; ++i) {
      edges.push_back(make_edge(prev, next));
      prev = next++;
    }
  }
  return Graph::build(next, std::move(edges));
}

/// Canonical attachment slots within a chain of `count` internal vertices:
/// both ends, their neighbors, and the middle.
inline std::vector<int> chain_slots(int count) {
  std::vector<int> out;
  for (int cand : {0, 1, count / 2, count - 2, count - 1}) {
    if (cand < 0 || cand >= count) continue;
    bool dup = false;
    for (int c : out) dup |= (c == cand);
    if (!dup) out.push_back(cand);
  }
  return out;
}

/// Visits non-decreasing index vectors of length t over [0, k).
template <class F>
void for_each_multiset(int k, int t, F&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(t), 0);
  for (;;) {
    fn(idx);
    int i = t - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - 1) --i;
    if (i < 0) return;
    int v = ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
}

struct SearchState {
  std::int64_t budget = 0;
  std::int64_t tested = 0;
  std::optional<Graph> found;
  RecipeStep winning_step;

  bool exhausted() const { return tested >= budget; }

  /// Tests one candidate; returns true when the search should stop.
  bool consider(const Skeleton& skel, const std::vector<Pendant>& pendants, int target,
                const char* op, std::vector<std::int64_t> args) {
    if (exhausted()) return true;
    ++tested;
    Graph g = decorate(skel, pendants);
    if (g.order() != target) throw Error("internal: search candidate has wrong order");
    if (certified_neutral(g)) {
      found = std::move(g);
      winning_step = RecipeStep{op, std::move(args)};
      return true;
    }
    return false;
  }
};

/// Pendant length assignment: q of the t pendants are single leaves, the rest
/// have length >= 2 with all slack pushed into the last long pendant.
inline bool assign_pendant_lengths(std::vector<Pendant>& pendants, const std::vector<int>& types,
                                   int total) {
  int t = static_cast<int>(types.size());
  int minimal = 0;
  int last_long = -1;
  for (int i = 0; i < t; ++i) {
    minimal += types[static_cast<std::size_t>(i)];
    if (types[static_cast<std::size_t>(i)] == 2) last_long = i;
  }
  if (total < minimal) return false;
  int excess = total - minimal;
  if (excess > 0 && last_long < 0) return false;
  for (int i = 0; i < t; ++i) pendants[static_cast<std::size_t>(i)].len = types[static_cast<std::size_t>(i)];
  if (excess > 0) pendants[static_cast<std::size_t>(last_long)].len += excess;
  return true;
}

/// Type vectors aligned to sorted attachment ids: repeats of the same slot
/// must carry non-decreasing types so equivalent candidates appear once.
template <class F>
void for_each_type_vector(const std::vector<int>& slots, F&& fn) {
  const int t = static_cast<int>(slots.size());
  std::vector<int> types(static_cast<std::size_t>(t), 1);
  for (int bits = 0; bits < (1 << t); ++bits) {
    bool ok = true;
    for (int i = 0; i < t; ++i) types[static_cast<std::size_t>(i)] = (bits >> i & 1) ? 2 : 1;
    for (int i = 0; i + 1 < t; ++i)
      if (slots[static_cast<std::size_t>(i)] == slots[static_cast<std::size_t>(i + 1)] &&
          types[static_cast<std::size_t>(i)] > types[static_cast<std::size_t>(i + 1)])
        ok = false;
    if (ok) fn(types);
  }
}

/// Family 1: cycle of girth g with up to three pendant paths; attachment
/// points may repeat (several pendants on one cycle vertex).
inline void search_cycle_pendants(int target, SearchState& st) {
  for (int g = 3; g < target && !st.found && !st.exhausted(); ++g) {
    const int rest = target - g;
    std::vector<int> slots;
    for (int cand : {0, 1, 2, 3, g / 2, g - 3, g - 2, g - 1}) {
      if (cand < 0 || cand >= g) continue;
      bool dup = false;
      for (int c : slots) dup |= (c == cand);
      if (!dup) slots.push_back(cand);
    }
    Skeleton skel = cycle_skeleton(g);
    for (int t = 1; t <= 3 && !st.found && !st.exhausted(); ++t) {
      for_each_multiset(static_cast<int>(slots.size()), t, [&](const std::vector<int>& pick) {
        if (st.found || st.exhausted()) return;
        std::vector<int> at(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) at[static_cast<std::size_t>(i)] = slots[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
        std::sort(at.begin(), at.end());
        for_each_type_vector(at, [&](const std::vector<int>& types) {
          if (st.found || st.exhausted()) return;
          std::vector<Pendant> pendants(static_cast<std::size_t>(t));
          for (int i = 0; i < t; ++i) pendants[static_cast<std::size_t>(i)].at = at[static_cast<std::size_t>(i)];
          if (!assign_pendant_lengths(pendants, types, rest)) return;
          std::vector<std::int64_t> args{g};
          for (const Pendant& p : pendants) {
            args.push_back(p.at);
            args.push_back(p.len);
          }
          st.consider(skel, pendants, target, "cycle_pendants", std::move(args));
        });
      });
    }
  }
}

/// Shared pendant loop for the multi-segment skeletons: attachments are sets
/// of (segment, slot) positions realized against the instantiated skeleton.
template <class MakeArgs>
inline void search_skeleton_pendants(const Skeleton& skel, int target, int max_pendants,
                                     const char* op, MakeArgs&& make_args, SearchState& st) {
  const int rest = target - skel.order;
  if (rest < 0) return;
  std::vector<int> all_slots;  // flat vertex ids
  for (const auto& seg : skel.segments)
    for (int pos : chain_slots(static_cast<int>(seg.size()))) all_slots.push_back(seg[static_cast<std::size_t>(pos)]);
  std::sort(all_slots.begin(), all_slots.end());
  all_slots.erase(std::unique(all_slots.begin(), all_slots.end()), all_slots.end());

  if (rest == 0) {
    st.consider(skel, {}, target, op, make_args({}));
    return;
  }
  const int k = static_cast<int>(all_slots.size());
  for (int t = 1; t <= max_pendants && !st.found && !st.exhausted(); ++t) {
    if (t > k) break;
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<int> at(static_cast<std::size_t>(t));
      for (int i = 0; i < t; ++i) at[static_cast<std::size_t>(i)] = all_slots[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      for_each_type_vector(at, [&](const std::vector<int>& types) {
        if (st.found || st.exhausted()) return;
        std::vector<Pendant> pendants(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) pendants[static_cast<std::size_t>(i)].at = at[static_cast<std::size_t>(i)];
        if (!assign_pendant_lengths(pendants, types, rest)) return;
        st.consider(skel, pendants, target, op, make_args(pendants));
      });
      if (st.found || st.exhausted()) return;
      int i = t - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - t + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

/// Family 2a: theta graphs with up to three pendants; all slack beyond the
/// enumerated small (a, b) goes into the third path.
inline void search_theta_pendants(int target, SearchState& st) {
  for (int a = 1; a <= 4 && !st.found && !st.exhausted(); ++a) {
    for (int b = std::max(a, 2); b <= 8 && !st.found && !st.exhausted(); ++b) {
      for (int pend = 0; pend <= 6 && !st.found && !st.exhausted(); ++pend) {
        // pend = total pendant length budget; c absorbs the remainder
        int c = target - pend - (a + b - 1);
        if (c < b) continue;
        Skeleton skel = theta_skeleton(a, b, c);
        search_skeleton_pendants(skel, target, 3, "theta_pendants",
                                 [&](const std::vector<Pendant>& ps) {
                                   std::vector<std::int64_t> args{a, b, c};
                                   for (const Pendant& p : ps) {
                                     args.push_back(p.at);
                                     args.push_back(p.len);
                                   }
                                   return args;
                                 },
                                 st);
      }
    }
  }
}

/// Family 2b: dumbbells with up to three pendants; the second cycle absorbs
/// the slack.
inline void search_dumbbell_pendants(int target, SearchState& st) {
  for (int g1 = 3; g1 <= 8 && !st.found && !st.exhausted(); ++g1) {
    for (int br = 1; br <= 4 && !st.found && !st.exhausted(); ++br) {
      for (int pend = 0; pend <= 6 && !st.found && !st.exhausted(); ++pend) {
        int g2 = target - pend - g1 - (br - 1);
        if (g2 < g1) continue;
        Skeleton skel = dumbbell_skeleton(g1, g2, br);
        search_skeleton_pendants(skel, target, 3, "dumbbell_pendants",
                                 [&](const std::vector<Pendant>& ps) {
                                   std::vector<std::int64_t> args{g1, g2, br};
                                   for (const Pendant& p : ps) {
                                     args.push_back(p.at);
                                     args.push_back(p.len);
                                   }
                                   return args;
                                 },
                                 st);
      }
    }
  }
}

/// Family 3: K4 homeomorphs with up to four pendants.  The subdivision
/// pattern is canonical: the last `keep` edges stay unsubdivided and the
/// internal vertices are spread either evenly or concentrated on the first
/// chain.
inline void search_k4_pendants(int target, SearchState& st) {
  for (int keep = 0; keep <= 6 && !st.found && !st.exhausted(); ++keep) {
    const int chains = 6 - keep;
    for (int pend = 0; pend <= 8 && !st.found && !st.exhausted(); ++pend) {
      const int internals = target - 4 - pend;
      if (internals < chains) continue;
      if (chains == 0 && internals > 0) continue;
      std::array<int, 6> even{};
      for (int j = 0; j < chains; ++j)
        even[static_cast<std::size_t>(j)] = internals / chains + (j < internals % chains ? 1 : 0);
      std::array<int, 6> heavy{};
      for (int j = 0; j < chains; ++j) heavy[static_cast<std::size_t>(j)] = 1;
      if (chains > 0) heavy[0] += internals - chains;
      for (int mode = 0; mode < 2 && !st.found && !st.exhausted(); ++mode) {
        if (mode == 1 && (chains == 0 || heavy == even)) continue;
        const std::array<int, 6>& subs = mode == 0 ? even : heavy;
        Skeleton skel = k4_skeleton(subs);
        search_skeleton_pendants(skel, target, 4, "k4_pendants",
                                 [&](const std::vector<Pendant>& ps) {
                                   std::vector<std::int64_t> args(subs.begin(), subs.end());
                                   for (const Pendant& p : ps) {
                                     args.push_back(p.at);
                                     args.push_back(p.len);
                                   }
                                   return args;
                                 },
                                 st);
      }
    }
  }
}

}  // namespace detail

/// Re-executes a recipe step produced by the fallback search.
inline Graph execute_search_step(const RecipeStep& step) {
  using namespace detail;
  auto pendants_from = [](const std::vector<std::int64_t>& args, std::size_t from) {
    std::vector<Pendant> ps;
    for (std::size_t i = from; i + 1 < args.size(); i += 2)
      ps.push_back(Pendant{static_cast<int>(args[i]), static_cast<int>(args[i + 1])});
    return ps;
  };
  if (step.op == "cycle_pendants")
    return decorate(cycle_skeleton(static_cast<int>(step.args[0])), pendants_from(step.args, 1));
  if (step.op == "theta_pendants")
    return decorate(theta_skeleton(static_cast<int>(step.args[0]), static_cast<int>(step.args[1]),
                                   static_cast<int>(step.args[2])),
                    pendants_from(step.args, 3));
  if (step.op == "dumbbell_pendants")
    return decorate(dumbbell_skeleton(static_cast<int>(step.args[0]), static_cast<int>(step.args[1]),
                                      static_cast<int>(step.args[2])),
                    pendants_from(step.args, 3));
  if (step.op == "k4_pendants") {
    std::array<int, 6> subs{};
    for (int j = 0; j < 6; ++j) subs[static_cast<std::size_t>(j)] = static_cast<int>(step.args[static_cast<std::size_t>(j)]);
    return decorate(k4_skeleton(subs), pendants_from(step.args, 6));
  }
  throw BadParams("unknown search step " + step.op);
}

constexpr std::int64_t kDefaultSearchBudget = 2'000'000;

/// Outcome of the neutral non-tree construction: either a certified graph
/// with the plan that produced it, or an honest not-found record.
struct NontreeResult {
  std::optional<Graph> graph;
  RecipePlan plan;
  std::int64_t candidates_tested = 0;
  std::string note;
};

/// Certified neutral non-tree graph of the given order.  Closed-form routes
/// cover orders divisible by 3 (>= 15), even orders (>= 14) and orders
/// congruent to 1 or 4 mod 6 (>= 19); the rest fall back to the bounded
/// search.  A missing result is reported, never fabricated.
inline NontreeResult neutral_nontree(int target_order, std::int64_t budget = kDefaultSearchBudget) {
  if (target_order < 13)
    throw OrderTooSmall("neutral non-tree construction starts at order 13");
  NontreeResult out;
  out.plan.target_order = target_order;
  out.plan.kind = RecipePlan::Kind::non_tree;

  auto finish = [&](Graph g, RecipePlan::Kind) {
    if (!detail::certified_neutral(g)) throw Error("internal: route certification failed");
    if (g.edge_count() < g.order()) throw Error("internal: route produced an acyclic graph");
    out.graph = std::move(g);
    return out;
  };

  if (target_order % 3 == 0) {
    int g = target_order / 3;
    out.plan.route = {{"cycle", {g}}, {"leaf_connect", {}}};
    out.plan.provenance = {"L5"};
    return finish(leaf_connect(family_cycle(g)), out.plan.kind);
  }
  if (target_order % 2 == 0) {
    int h = target_order / 2;
    out.plan.route = {{"neutral_tree", {h}}, {"ominus", {}}};
    out.plan.provenance = {"T2", "A1"};
    return finish(ominus(neutral_tree(h)), out.plan.kind);
  }
  if ((target_order % 6 == 1 || target_order % 6 == 4) && target_order >= 19) {
    int h = (target_order + 2) / 3;
    out.plan.route = {{"neutral_tree", {h}}, {"leaf_connect", {}}};
    out.plan.provenance = {"T2", "L4"};
    return finish(leaf_connect(neutral_tree(h)), out.plan.kind);
  }

  detail::SearchState st;
  st.budget = budget;
  detail::search_cycle_pendants(target_order, st);
  if (!st.found) detail::search_theta_pendants(target_order, st);
  if (!st.found) detail::search_dumbbell_pendants(target_order, st);
  if (!st.found) detail::search_k4_pendants(target_order, st);
  out.candidates_tested = st.tested;
  if (st.found) {
    out.plan.route = {st.winning_step};
    out.plan.provenance = {};
    Graph g = *st.found;
    if (!detail::certified_neutral(g)) throw Error("internal: search certification failed");
    out.graph = std::move(g);
    return out;
  }
  out.note = "order " + std::to_string(target_order) + " (mod 6 = " + std::to_string(target_order % 6) +
             "): " + (st.exhausted() ? "budget exhausted" : "search families exhausted") + " after " +
             std::to_string(st.tested) + " candidates";
  return out;
}

// ---------------------------------------------------------------------------
// Coverage table
// ---------------------------------------------------------------------------

enum class CoverageStatus { CERTIFIED, NOT_FOUND, BELOW_THRESHOLD };

inline const char* to_string(CoverageStatus s) {
  switch (s) {
    case CoverageStatus::CERTIFIED: return "CERTIFIED";
    case CoverageStatus::NOT_FOUND: return "NOT_FOUND";
    case CoverageStatus::BELOW_THRESHOLD: return "BELOW_THRESHOLD";
  }
  return "?";
}

struct CoverageEntry {
  CoverageStatus status = CoverageStatus::BELOW_THRESHOLD;
  std::string route;
  std::string certificate;  // graph6, present iff CERTIFIED
};

struct CoverageRow {
  int order = 0;
  CoverageEntry tree;
  CoverageEntry nontree;
};

/// Certified construction status for every order up to max_order.
inline std::vector<CoverageRow> coverage_table(int max_order,
                                               std::int64_t budget = kDefaultSearchBudget) {
  if (max_order < 1) throw BadParams("coverage table needs max_order >= 1");
  std::vector<CoverageRow> rows;
  for (int n = 1; n <= max_order; ++n) {
    CoverageRow row;
    row.order = n;
    if (n >= 7) {
      Graph t = neutral_tree(n);
      row.tree.status = CoverageStatus::CERTIFIED;
      row.tree.route = "spider(2,2," + std::to_string(n - 5) + ")";
      row.tree.certificate = graph6_encode(t);
    }
    if (n >= 13) {
      NontreeResult res = neutral_nontree(n, budget);
      if (res.graph) {
        row.nontree.status = CoverageStatus::CERTIFIED;
        row.nontree.route = res.plan.describe();
        row.nontree.certificate = graph6_encode(*res.graph);
      } else {
        row.nontree.status = CoverageStatus::NOT_FOUND;
        row.nontree.route = res.note;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace assort
