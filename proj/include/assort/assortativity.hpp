#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "assort/arith.hpp"
#include "assort/graph.hpp"

namespace assort {

/// Exact integer aggregates of the assortativity coefficient.  With the
/// per-edge sums
///   P = sum d_u*d_v,  S = sum (d_u+d_v),  Q = sum (d_u^2+d_v^2)
/// the coefficient equals N/D where N = 4mP - S^2 and D = 2mQ - S^2, after
/// clearing the common 1/(4m^2) factor from numerator and denominator.
/// D is never negative, and D = 0 exactly for regular graphs.
struct AssortStats {
  std::int64_t m = 0;
  Wide p = 0;
  Wide s = 0;
  Wide q = 0;
  Wide n = 0;
  Wide d = 0;
};

inline AssortStats stats(const Graph& g) {
  if (g.edge_count() == 0) throw EmptyEdgeSet("assortativity undefined for edgeless graph");
  AssortStats st;
  st.m = g.edge_count();
  for (const auto& [u, v] : g.edges()) {
    Wide du = g.degree(u);
    Wide dv = g.degree(v);
    st.p = checked_add(st.p, checked_mul(du, dv));
    st.s = checked_add(st.s, checked_add(du, dv));
    st.q = checked_add(st.q, checked_add(checked_mul(du, du), checked_mul(dv, dv)));
  }
  Wide s2 = checked_mul(st.s, st.s);
  st.n = checked_sub(checked_mul(checked_mul(4, st.m), st.p), s2);
  st.d = checked_sub(checked_mul(checked_mul(2, st.m), st.q), s2);
  return st;
}

enum class Tag { assortative, disassortative, neutral, undefined_regular };

inline const char* to_string(Tag t) {
  switch (t) {
    case Tag::assortative: return "assortative";
    case Tag::disassortative: return "disassortative";
    case Tag::neutral: return "neutral";
    case Tag::undefined_regular: return "undefined-regular";
  }
  return "?";
}

/// Exact coefficient N/D in lowest terms; absent when D = 0 (regular graph,
/// where the defining expression is 0/0).
inline std::optional<Rational> coefficient(const AssortStats& st) {
  if (st.d == 0) return std::nullopt;
  return Rational::make(st.n, st.d);
}

struct Classification {
  Tag tag = Tag::undefined_regular;
  std::optional<Rational> r;
};

inline Classification classify(const AssortStats& st) {
  Classification c;
  if (st.d == 0) {
    c.tag = Tag::undefined_regular;
    return c;
  }
  c.r = Rational::make(st.n, st.d);
  if (st.n > 0)
    c.tag = Tag::assortative;
  else if (st.n < 0)
    c.tag = Tag::disassortative;
  else
    c.tag = Tag::neutral;
  return c;
}

inline Classification classify(const Graph& g) { return classify(stats(g)); }

inline bool is_neutral(const AssortStats& st) { return st.n == 0 && st.d > 0; }
inline bool is_neutral(const Graph& g) { return is_neutral(stats(g)); }

/// True iff sum over edges of (d_u + d_v) equals 4m.  Requires a connected
/// input; the connected graphs with this property are exactly the cycles and
/// the trees with a single degree-3 vertex and no higher degree.
inline bool lemma1_condition(const Graph& g) {
  if (!g.is_connected()) throw Disconnected("lemma1_condition requires a connected graph");
  if (g.edge_count() == 0) throw EmptyEdgeSet("lemma1_condition requires at least one edge");
  AssortStats st = stats(g);
  return st.s == checked_mul(4, st.m);
}

}  // namespace assort
