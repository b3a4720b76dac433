#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bimoore/errors.hpp"

namespace bimoore {

/// Bipartite graph stored as its n1 x n2 biadjacency bit matrix.
///
/// Side-1 vertices index the rows, side-2 vertices the columns, and an edge
/// always joins a row vertex to a column vertex, so same-side adjacency is
/// unrepresentable by construction. The two sides are *not* interchangeable:
/// equality, comparison and canonical forms all respect the side split (use
/// transposed() to swap sides explicitly).
///
/// Rows are packed little-endian into 64-bit words: column j lives in word
/// j/64 at bit j%64. All bit-string comparisons in the library read column 0
/// as the most significant position.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  BipartiteGraph(int n1, int n2) : n1_(n1), n2_(n2) {
    if (n1 < 0 || n2 < 0) throw Error(Errc::bad_input, "negative side size");
    words_ = (n2 + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n1) * words_, 0);
  }

  static BipartiteGraph from_edges(int n1, int n2,
                                   const std::vector<std::pair<int, int>>& edges) {
    BipartiteGraph g(n1, n2);
    for (auto [i, j] : edges) g.set_edge(i, j);
    return g;
  }

  int n1() const noexcept { return n1_; }
  int n2() const noexcept { return n2_; }
  int order() const noexcept { return n1_ + n2_; }
  int words_per_row() const noexcept { return words_; }

  bool edge(int i, int j) const {
    check_pair(i, j);
    return (bits_[idx(i, j)] >> (j & 63)) & 1u;
  }

  void set_edge(int i, int j) {
    check_pair(i, j);
    bits_[idx(i, j)] |= std::uint64_t{1} << (j & 63);
  }

  void clear_edge(int i, int j) {
    check_pair(i, j);
    bits_[idx(i, j)] &= ~(std::uint64_t{1} << (j & 63));
  }

  std::span<const std::uint64_t> row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_,
            static_cast<std::size_t>(words_)};
  }

  std::span<std::uint64_t> row_mut(int i) {
    return {bits_.data() + static_cast<std::size_t>(i) * words_,
            static_cast<std::size_t>(words_)};
  }

  int row_degree(int i) const {
    int d = 0;
    for (std::uint64_t w : row(i)) d += std::popcount(w);
    return d;
  }

  long long edge_count() const {
    long long m = 0;
    for (int i = 0; i < n1_; ++i) m += row_degree(i);
    return m;
  }

  std::vector<int> row_degrees() const {
    std::vector<int> d(n1_);
    for (int i = 0; i < n1_; ++i) d[i] = row_degree(i);
    return d;
  }

  std::vector<int> column_degrees() const {
    std::vector<int> d(n2_, 0);
    for (int i = 0; i < n1_; ++i) {
      auto r = row(i);
      for (int w = 0; w < words_; ++w) {
        std::uint64_t x = r[w];
        while (x) {
          d[w * 64 + std::countr_zero(x)]++;
          x &= x - 1;
        }
      }
    }
    return d;
  }

  std::vector<int> row_neighbors(int i) const {
    std::vector<int> out;
    auto r = row(i);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t x = r[w];
      while (x) {
        out.push_back(w * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
    return out;
  }

  BipartiteGraph transposed() const {
    BipartiteGraph t(n2_, n1_);
    for (int i = 0; i < n1_; ++i)
      for (int j : row_neighbors(i)) t.set_edge(j, i);
    t.labels_[0] = labels_[1];
    t.labels_[1] = labels_[0];
    return t;
  }

  /// Structural equality; labels are presentation metadata and do not count.
  bool operator==(const BipartiteGraph& o) const {
    return n1_ == o.n1_ && n2_ == o.n2_ && bits_ == o.bits_;
  }
  bool operator!=(const BipartiteGraph& o) const { return !(*this == o); }

  /// Three-way comparison of the row-major bit strings, column 0 first
  /// (1 sorts above 0). Sizes compare first so mixed sizes are total-ordered.
  int compare_bits(const BipartiteGraph& o) const {
    if (n1_ != o.n1_) return n1_ < o.n1_ ? -1 : 1;
    if (n2_ != o.n2_) return n2_ < o.n2_ ? -1 : 1;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t x = bits_[w] ^ o.bits_[w];
      if (x) {
        int b = std::countr_zero(x);
        return ((bits_[w] >> b) & 1u) ? 1 : -1;
      }
    }
    return 0;
  }

  // Optional display labels (used by DOT export); side is 1 or 2.
  void set_side_labels(int side, std::vector<std::string> labels) {
    labels_[side - 1] = std::move(labels);
  }
  const std::vector<std::string>& side_labels(int side) const {
    return labels_[side - 1];
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * words_ + (j >> 6);
  }
  void check_pair(int i, int j) const {
    if (i < 0 || i >= n1_ || j < 0 || j >= n2_)
      throw Error(Errc::bad_input, "vertex index out of range");
  }

  int n1_ = 0, n2_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_[2];
};

/// Per-side degree sequences in vertex order.
inline std::pair<std::vector<int>, std::vector<int>> degrees(const BipartiteGraph& g) {
  return {g.row_degrees(), g.column_degrees()};
}

/// (r, s) = (side-1 degree, side-2 degree) when both sides are regular,
/// nullopt otherwise. The edge-count identity r*n1 == s*n2 holds whenever
/// this returns a value, by double counting.
inline std::optional<std::pair<int, int>> is_biregular(const BipartiteGraph& g) {
  if (g.n1() == 0 || g.n2() == 0) return std::nullopt;
  int r = g.row_degree(0);
  for (int i = 1; i < g.n1(); ++i)
    if (g.row_degree(i) != r) return std::nullopt;
  auto cd = g.column_degrees();
  int s = cd[0];
  for (int j = 1; j < g.n2(); ++j)
    if (cd[j] != s) return std::nullopt;
  return std::make_pair(r, s);
}

/// True when the degree pair matches {r, s} on the two sides in either order.
inline bool matches_degrees(const BipartiteGraph& g, int r, int s) {
  auto rs = is_biregular(g);
  if (!rs) return false;
  return (rs->first == r && rs->second == s) || (rs->first == s && rs->second == r);
}

}  // namespace bimoore
