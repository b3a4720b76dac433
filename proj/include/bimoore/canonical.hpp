#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "bimoore/bipartite_graph.hpp"
#include "bimoore/errors.hpp"

namespace bimoore {

// Canonical labeling under independent row and column permutations. Sides are
// never exchanged. The canonical form is the lexicographically maximal
// biadjacency matrix, read row by row with column 0 most significant.
//
// Rows are placed one at a time. The rows placed so far induce an ordered
// partition of the columns into cells; inside a cell every remaining column
// permutation is still free, so the best placement of a candidate row packs
// its ones at the front of each cell. Ranking candidate rows by their
// per-cell one counts therefore matches ranking the induced row strings.
// Rows that tie on counts but differ as column sets refine the partition
// differently and are explored as separate branches; duplicate rows lead to
// identical subtrees and are explored once.

namespace detail {

inline int compare_packed(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int w = 0; w < words; ++w) {
    if (a[w] != b[w]) {
      int low = std::countr_zero(a[w] ^ b[w]);
      return ((a[w] >> low) & 1u) ? 1 : -1;
    }
  }
  return 0;
}

class CanonSearch {
 public:
  explicit CanonSearch(const BipartiteGraph& g)
      : g_(g), n1_(g.n1()), n2_(g.n2()), words_(g.words_per_row()) {}

  std::vector<std::uint64_t> max_string() {
    prepare();
    checking_ = false;
    dfs(0, initial_cols(), initial_classes(), false);
    return best_;
  }

  bool input_is_max() {
    prepare();
    checking_ = true;
    return dfs(0, initial_cols(), initial_classes(), false);
  }

 private:
  static constexpr std::uint64_t kNodeLimit = std::uint64_t{1} << 26;

  void prepare() {
    std::size_t cells = static_cast<std::size_t>(n1_) * words_;
    current_.assign(cells, 0);
    best_.assign(cells, 0);
    used_.assign(n1_, 0);
    have_best_ = false;
    nodes_ = 0;
    gen_ = 0;
  }

  std::vector<int> initial_cols() const {
    std::vector<int> cols(n2_);
    for (int j = 0; j < n2_; ++j) cols[j] = j;
    return cols;
  }

  std::vector<std::pair<int, int>> initial_classes() const {
    std::vector<std::pair<int, int>> classes;
    if (n2_ > 0) classes.push_back({0, n2_});
    return classes;
  }

  static bool row_bit(const std::uint64_t* row, int col) {
    return (row[col >> 6] >> (col & 63)) & 1u;
  }

  // Returns false only in checking mode, once a relabeling larger than the
  // input has been witnessed.
  bool dfs(int level, const std::vector<int>& cols,
           const std::vector<std::pair<int, int>>& classes, bool better) {
    if (++nodes_ > kNodeLimit)
      throw Error(Errc::work_limit, "canonical form search exceeded its node budget");
    if (level == n1_) {
      if (!checking_ && (better || !have_best_)) {
        best_ = current_;
        have_best_ = true;
        ++gen_;
      }
      return true;
    }

    // Rank the unused rows by per-class one counts.
    std::vector<int> best_counts;
    std::vector<int> ties;
    std::vector<int> counts;
    for (int i = 0; i < n1_; ++i) {
      if (used_[i]) continue;
      const std::uint64_t* row = g_.row(i).data();
      counts.clear();
      for (auto [start, len] : classes) {
        int c = 0;
        for (int k = start; k < start + len; ++k) c += row_bit(row, cols[k]);
        counts.push_back(c);
      }
      if (ties.empty() || counts > best_counts) {
        best_counts = counts;
        ties.assign(1, i);
      } else if (counts == best_counts) {
        bool dup = false;
        for (int j : ties)
          if (compare_packed(row, g_.row(j).data(), words_) == 0) {
            dup = true;
            break;
          }
        if (!dup) ties.push_back(i);
      }
    }

    // The row string this level contributes, shared by every tie.
    std::uint64_t* out = current_.data() + static_cast<std::size_t>(level) * words_;
    std::fill(out, out + words_, 0);
    {
      std::size_t ci = 0;
      for (auto [start, len] : classes) {
        int c = best_counts[ci++];
        for (int k = start; k < start + c; ++k)
          out[k >> 6] |= std::uint64_t{1} << (k & 63);
      }
    }

    bool next_better = better;
    if (checking_) {
      int cmp = compare_packed(out, g_.row(level).data(), words_);
      if (cmp > 0) return false;
      if (cmp < 0) return true;
    } else if (!better && have_best_) {
      int cmp = compare_packed(out, best_.data() + static_cast<std::size_t>(level) * words_,
                               words_);
      if (cmp < 0) return true;
      if (cmp > 0) next_better = true;
    }

    std::vector<int> ncols(n2_);
    for (int i : ties) {
      const std::uint64_t* row = g_.row(i).data();
      std::vector<std::pair<int, int>> nclasses;
      nclasses.reserve(classes.size() * 2);
      for (auto [start, len] : classes) {
        int pos = start;
        for (int k = start; k < start + len; ++k)
          if (row_bit(row, cols[k])) ncols[pos++] = cols[k];
        int ones = pos - start;
        for (int k = start; k < start + len; ++k)
          if (!row_bit(row, cols[k])) ncols[pos++] = cols[k];
        if (ones > 0) nclasses.push_back({start, ones});
        if (len - ones > 0) nclasses.push_back({start + ones, len - ones});
      }
      used_[i] = 1;
      std::uint64_t gen_before = gen_;
      bool cont = dfs(level + 1, ncols, nclasses, next_better);
      used_[i] = 0;
      if (!cont) return false;
      // A replacement under this frame shares our prefix, so subsequent ties
      // start out equal to the new best rather than ahead of it.
      if (gen_ != gen_before) next_better = false;
    }
    return true;
  }

  const BipartiteGraph& g_;
  int n1_, n2_, words_;
  bool checking_ = false;
  std::vector<std::uint64_t> current_, best_;
  std::vector<char> used_;
  bool have_best_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t gen_ = 0;
};

}  // namespace detail

/// Flat packed rows of the canonical form; equal exactly for graphs related
/// by row and column permutations.
inline std::vector<std::uint64_t> canonical_key(const BipartiteGraph& g) {
  detail::CanonSearch search(g);
  return search.max_string();
}

inline BipartiteGraph canonical_form(const BipartiteGraph& g) {
  std::vector<std::uint64_t> key = canonical_key(g);
  BipartiteGraph out(g.n1(), g.n2());
  int words = g.words_per_row();
  for (int i = 0; i < g.n1(); ++i)
    for (int j = 0; j < g.n2(); ++j)
      if ((key[static_cast<std::size_t>(i) * words + (j >> 6)] >> (j & 63)) & 1u)
        out.set_edge(i, j);
  return out;
}

inline bool is_canonical(const BipartiteGraph& g) {
  detail::CanonSearch search(g);
  return search.input_is_max();
}

}  // namespace bimoore
