#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bimoore/bipartite_graph.hpp"
#include "bimoore/errors.hpp"
#include "bimoore/graph6.hpp"

namespace bimoore {

// File-level formats.
//
// graph6 flavor: optional '#'-prefixed metadata lines followed by one graph6
// line. "#bipartite n1 n2" records the side split; "#provenance ..." and
// "#base n1 n2 <graph6>" let a transformed graph carry the transform kind and
// its base graph, so spectral identity checks can run from a single file.
//
// biadjacency text: "n1 n2" on the first line, then n1 lines of n2 chars
// drawn from {0,1}. The reader also skips '#' comment lines.

struct Provenance {
  std::string kind;  // "subdivision", "semi-double", "k-tuple"
  int r = 0;         // base degree, subdivision only
  int k = 0;         // multiplicity, k-tuple only
  int side = 1;      // duplicated side, semi-double / k-tuple
  std::optional<BipartiteGraph> base;
};

struct LoadedGraph {
  BipartiteGraph graph;
  std::optional<Provenance> provenance;
};

inline void write_graph6_file(std::ostream& os, const BipartiteGraph& g,
                              const Provenance* prov = nullptr) {
  os << "#bipartite " << g.n1() << ' ' << g.n2() << '\n';
  if (prov) {
    os << "#provenance " << prov->kind;
    if (prov->kind == "subdivision") os << " r=" << prov->r;
    if (prov->kind == "semi-double") os << " side=" << prov->side;
    if (prov->kind == "k-tuple") os << " k=" << prov->k << " side=" << prov->side;
    os << '\n';
    if (prov->base)
      os << "#base " << prov->base->n1() << ' ' << prov->base->n2() << ' '
         << encode_graph6(*prov->base) << '\n';
  }
  os << encode_graph6(g) << '\n';
}

inline void write_biadjacency(std::ostream& os, const BipartiteGraph& g) {
  os << g.n1() << ' ' << g.n2() << '\n';
  for (int i = 0; i < g.n1(); ++i) {
    std::string line(g.n2(), '0');
    for (int j : g.row_neighbors(i)) line[j] = '1';
    os << line << '\n';
  }
}

namespace detail {

inline BipartiteGraph read_biadjacency_body(std::istream& is, int n1, int n2) {
  BipartiteGraph g(n1, n2);
  std::string line;
  for (int i = 0; i < n1; ++i) {
    if (!std::getline(is, line))
      throw ParseError("biadjacency matrix truncated at row " + std::to_string(i), 0);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (static_cast<int>(line.size()) != n2)
      throw ParseError("biadjacency row " + std::to_string(i) + " has wrong length",
                       line.size());
    for (int j = 0; j < n2; ++j) {
      if (line[j] == '1')
        g.set_edge(i, j);
      else if (line[j] != '0')
        throw ParseError("biadjacency rows must contain only 0 and 1",
                         static_cast<std::size_t>(j));
    }
  }
  return g;
}

}  // namespace detail

/// Reads either file flavor, dispatching on the first payload line: a line
/// starting with a digit is a biadjacency header (graph6 bytes are all >= 63,
/// so the formats cannot collide).
inline LoadedGraph read_graph(std::istream& is) {
  std::optional<std::pair<int, int>> sides;
  std::optional<Provenance> prov;
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string tag;
      ls >> tag;
      if (tag == "bipartite") {
        int a, b;
        if (!(ls >> a >> b)) throw ParseError("malformed #bipartite header", 0);
        sides = {a, b};
      } else if (tag == "provenance") {
        Provenance p;
        ls >> p.kind;
        std::string kv;
        while (ls >> kv) {
          auto eq = kv.find('=');
          if (eq == std::string::npos) continue;
          std::string key = kv.substr(0, eq);
          int val = std::stoi(kv.substr(eq + 1));
          if (key == "r") p.r = val;
          if (key == "k") p.k = val;
          if (key == "side") p.side = val;
        }
        if (prov && prov->base) p.base = std::move(prov->base);
        prov = std::move(p);
      } else if (tag == "base") {
        int a, b;
        std::string g6;
        if (!(ls >> a >> b >> g6)) throw ParseError("malformed #base header", 0);
        if (!prov) prov = Provenance{};
        prov->base = decode_graph6(g6, a, b);
      }
      continue;
    }
    if (line[0] >= '0' && line[0] <= '9') {
      std::istringstream hs(line);
      int a, b;
      if (!(hs >> a >> b)) throw ParseError("malformed biadjacency size line", 0);
      LoadedGraph out{detail::read_biadjacency_body(is, a, b), std::move(prov)};
      return out;
    }
    BipartiteGraph g =
        sides ? decode_graph6(line, sides->first, sides->second) : decode_graph6(line);
    return {std::move(g), std::move(prov)};
  }
  throw ParseError("no graph found in input", 0);
}

inline std::string to_dot(const BipartiteGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  const auto& l1 = g.side_labels(1);
  const auto& l2 = g.side_labels(2);
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  };
  os << "graph " << name << " {\n";
  for (int i = 0; i < g.n1(); ++i) {
    os << "  u" << i << " [shape=box";
    if (i < static_cast<int>(l1.size())) os << ",label=" << quote(l1[i]);
    os << "];\n";
  }
  for (int j = 0; j < g.n2(); ++j) {
    os << "  v" << j << " [shape=circle";
    if (j < static_cast<int>(l2.size())) os << ",label=" << quote(l2[j]);
    os << "];\n";
  }
  for (int i = 0; i < g.n1(); ++i)
    for (int j : g.row_neighbors(i)) os << "  u" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bimoore
