#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "assort/graph.hpp"

namespace assort {

/// Parses the edge-list format: header line "n m" followed by m lines "u v".
/// Validation matches Graph::build; errors carry the offending line number.
inline Graph edge_list_parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("missing header line", 1);
  std::istringstream header(line);
  long long n = 0, m = 0;
  if (!(header >> n >> m) || n < 1 || m < 0) throw ParseError("header must be \"n m\"", lineno);
  std::string trailing;
  if (header >> trailing) throw ParseError("unexpected token in header", lineno);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError("expected " + std::to_string(m) + " edges", lineno + 1);
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v)) throw ParseError("edge line must be \"u v\"", lineno);
    if (row >> trailing) throw ParseError("unexpected token after edge", lineno);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw VertexOutOfRange("endpoint outside [0," + std::to_string(n) + ") at line " + std::to_string(lineno));
    if (u == v) throw LoopRejected("self-loop at line " + std::to_string(lineno));
    Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
    if (!seen.insert(e).second) throw DuplicateEdge("duplicate edge at line " + std::to_string(lineno));
    edges.push_back(e);
  }
  if (next_line()) throw ParseError("trailing content after edge list", lineno);
  return Graph::build(static_cast<int>(n), std::move(edges));
}

/// Canonical emission: header plus edges in sorted order.
inline std::string edge_list_emit(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// DOT export: one edge statement per edge, node statements for isolated
/// vertices so the order is preserved.
inline std::string dot_emit(const Graph& g) {
  std::string out = "graph g {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace assort
