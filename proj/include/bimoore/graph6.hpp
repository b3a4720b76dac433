#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bimoore/bipartite_graph.hpp"
#include "bimoore/errors.hpp"

namespace bimoore {

// graph6: printable encoding of an undirected graph. The vertex count is
// followed by the upper triangle of the adjacency matrix read column by
// column (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), zero-padded to a multiple
// of six bits, each six-bit group emitted as one byte with offset 63.
//
// Side-1 vertices occupy global ids 0..n1-1 and side-2 vertices n1..n-1; the
// side split itself is not part of the format and travels in an adjacent
// metadata line (see io.hpp).

inline std::string encode_graph6(const BipartiteGraph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw Error(Errc::too_large, "graph6 encoder supports at most 258047 vertices");
  }
  int acc = 0, nbits = 0;
  auto push_bit = [&](int b) {
    acc = (acc << 1) | b;
    if (++nbits == 6) {
      out.push_back(static_cast<char>(63 + acc));
      acc = 0;
      nbits = 0;
    }
  };
  int n1 = g.n1();
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      int b = 0;
      if (u < n1 && v >= n1) b = g.edge(u, v - n1) ? 1 : 0;
      push_bit(b);
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

namespace detail {

struct Graph6Payload {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // global ids, u < v
};

inline Graph6Payload parse_graph6_line(std::string_view line) {
  auto byte_at = [&](std::size_t pos) -> int {
    if (pos >= line.size())
      throw ParseError("graph6 line truncated", pos);
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte out of printable range", pos);
    return c - 63;
  };

  Graph6Payload out;
  std::size_t pos = 0;
  int first = byte_at(pos++);
  long long n;
  if (first == 63) {  // '~' introduces an extended vertex count
    if (pos < line.size() && line[pos] == '~')
      throw ParseError("graph6 sizes above 258047 are not supported", pos);
    long long a = byte_at(pos++), b = byte_at(pos++), c = byte_at(pos++);
    n = (a << 12) | (b << 6) | c;
  } else {
    n = first;
  }
  if (n < 0 || n > 258047) throw ParseError("graph6 vertex count out of range", 0);
  out.n = static_cast<int>(n);

  long long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() != pos + nbytes)
    throw ParseError("graph6 body has wrong length", line.size());

  long long bit = 0;
  int u = 0, v = 1;
  for (std::size_t k = 0; k < nbytes; ++k) {
    int val = byte_at(pos + k);
    for (int t = 5; t >= 0; --t, ++bit) {
      int b = (val >> t) & 1;
      if (bit >= nbits) {
        if (b) throw ParseError("nonzero padding bits in graph6 body", pos + k);
        continue;
      }
      if (b) out.edges.emplace_back(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Decode with an explicit side split: vertices [0, n1) are side 1.
inline BipartiteGraph decode_graph6(std::string_view line, int n1, int n2) {
  auto payload = detail::parse_graph6_line(line);
  if (payload.n != n1 + n2)
    throw Error(Errc::bad_input, "side sizes disagree with graph6 vertex count");
  BipartiteGraph g(n1, n2);
  for (auto [u, v] : payload.edges) {
    if (u >= n1 || v < n1)
      throw Error(Errc::bad_input, "edge within one side; not bipartite for this split");
    g.set_edge(u, v - n1);
  }
  return g;
}

/// Decode without metadata, inferring the side split. Requires the split to
/// be unambiguous: every edge must cross a single prefix/suffix cut, which is
/// the case for connected bipartite graphs stored with side-1 vertices first.
inline BipartiteGraph decode_graph6(std::string_view line) {
  auto payload = detail::parse_graph6_line(line);
  if (payload.edges.empty())
    throw Error(Errc::bad_input, "cannot infer side split of an edgeless graph6 line");
  int max_u = 0, min_v = payload.n;
  for (auto [u, v] : payload.edges) {
    max_u = std::max(max_u, u);
    min_v = std::min(min_v, v);
  }
  if (max_u >= min_v)
    throw Error(Errc::bad_input, "vertices are not ordered side 1 first");
  if (min_v - max_u > 1)
    throw Error(Errc::bad_input,
                "side split is ambiguous; supply a '#bipartite n1 n2' header");
  int n1 = min_v;
  return decode_graph6(line, n1, payload.n - n1);
}

}  // namespace bimoore
