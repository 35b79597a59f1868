#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "assort/graph.hpp"

namespace assort {

/// Single-line printable graph encoding: order header (one byte n+63 for
/// n <= 62, otherwise 0x7E plus three 6-bit groups), followed by the upper
/// triangle adjacency bits in column order (v from 1 to n-1, u from 0 to
/// v-1) packed big-endian into 6-bit groups, each offset by 63.
inline std::string graph6_encode(const Graph& g) {
  const std::int64_t n = g.order();
  if (n > 258047) throw OrderUnsupported("graph6 header supports order <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  unsigned group = 0;
  int bit = 5;
  bool any = false;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      any = true;
      if (g.has_edge(u, v)) group |= 1u << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        bit = 5;
      }
    }
  }
  if (any && bit != 5) out.push_back(static_cast<char>(63 + group));
  return out;
}

inline Graph graph6_decode(const std::string& s) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (s.size() - pos < k) throw BadCode("graph6 string truncated");
  };
  auto sixbits = [&]() {
    need(1);
    unsigned char c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw BadCode("graph6 byte outside printable range");
    return static_cast<std::int64_t>(c - 63);
  };
  need(1);
  std::int64_t n;
  if (static_cast<unsigned char>(s[pos]) == 126) {
    ++pos;
    need(3);
    n = (sixbits() << 12);
    n |= (sixbits() << 6);
    n |= sixbits();
    if (n <= 62) throw BadCode("graph6 long header used for small order");
  } else {
    n = sixbits();
  }
  if (n < 1) throw BadCode("graph6 order must be at least 1");
  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t groups = (bits + 5) / 6;
  if (static_cast<std::int64_t>(s.size() - pos) != groups) throw BadCode("graph6 payload length mismatch");
  std::vector<Edge> edges;
  std::int64_t consumed = 0;
  std::int64_t value = 0;
  int have = 0;
  int u = 0, v = 1;
  while (consumed < bits) {
    if (have == 0) {
      value = sixbits();
      have = 6;
    }
    bool set = (value >> (have - 1)) & 1;
    --have;
    ++consumed;
    if (set) edges.emplace_back(u, v);
    if (++u == v) {
      u = 0;
      ++v;
    }
  }
  if (have > 0 && (value & ((1 << have) - 1)) != 0) throw BadCode("graph6 nonzero padding bits");
  return Graph::build(static_cast<int>(n), std::move(edges));
}

}  // namespace assort
