#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bimoore/bipartite_graph.hpp"
#include "bimoore/bounds.hpp"
#include "bimoore/canonical.hpp"
#include "bimoore/errors.hpp"
#include "bimoore/metrics.hpp"

namespace bimoore {

// Isomorph-free generation of connected biregular bipartite graphs: side 1 =
// rows of degree r, side 2 = columns of degree s. Matrices are built row by
// row in the shape canonical forms take (rows non-increasing, ones
// left-packed inside every column class), pruned by Gale-Ryser feasibility,
// and a completed matrix is emitted only if it is connected and equals its
// canonical form. Disconnected candidates (e.g. two copies of K_{3,4} at
// sides (6,8)) are excluded from the generated counts: a diameter filter
// can never keep them, and the reference census tables count without them.

struct EnumSpec {
  int n1, n2, r, s, d;

  EnumSpec(int n1_, int n2_, int r_, int s_, int d_ = 0)
      : n1(n1_), n2(n2_), r(r_), s(s_), d(d_) {
    if (n1 < 1 || n2 < 1 || r < 1 || s < 1)
      throw Error(Errc::bad_input, "enumeration needs positive sizes and degrees");
    if (r > n2 || s > n1)
      throw Error(Errc::bad_input, "degrees cannot exceed the opposite side size");
    if (static_cast<long long>(n1) * r != static_cast<long long>(n2) * s)
      throw Error(Errc::bad_input, "need n1*r = n2*s for biregularity");
    if (n1 > 32 || n2 > 64)
      throw Error(Errc::too_large, "enumeration guardrail: n1 <= 32 and n2 <= 64");
  }
};

// Work is measured in row placements (search-tree nodes). The default lets
// every census rung up to ~15000 graphs finish on one core (the heaviest,
// (6,22) at degrees (11,3), takes ~32M nodes) while cutting off the
// million-graph rungs, which need hundreds of millions.
inline constexpr std::uint64_t kDefaultEnumWorkLimit = 50'000'000;

struct EnumOptions {
  std::uint64_t work_limit = kDefaultEnumWorkLimit;  // 0 = unlimited
  int threads = 1;
  int max_representatives = 8;
  std::istream* resume = nullptr;      // checkpoint lines to skip
  std::ostream* checkpoint = nullptr;  // completed-prefix lines written here
};

struct GenerateResult {
  std::uint64_t generated = 0;  // canonical graphs emitted (including resumed)
  std::uint64_t aux = 0;        // sink calls that returned true
  std::uint64_t nodes = 0;      // row placements performed this run
  bool incomplete = false;      // work limit hit somewhere
};

struct EnumReport {
  int n1 = 0, n2 = 0;
  Int t = 0;
  std::uint64_t generated = 0;
  std::uint64_t with_diameter = 0;
  std::vector<BipartiteGraph> representatives;
  double elapsed_seconds = 0.0;
  bool incomplete = false;
};

namespace detail {

inline std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Canonicity check for single-word rows; the same search as canonical.hpp
// with column classes held as bitmasks. Returns false as soon as any
// relabeling beats the input.
class PackedCanonChecker {
 public:
  PackedCanonChecker(const std::uint64_t* rows, int n1, int n2)
      : rows_(rows), n1_(n1), n2_(n2) {}

  bool run() {
    used_ = 0;
    std::array<std::uint64_t, 64> masks;
    std::array<int, 64> starts;
    int count = 0;
    if (n2_ > 0) {
      masks[0] = low_mask(n2_);
      starts[0] = 0;
      count = 1;
    }
    return dfs(0, masks.data(), starts.data(), count);
  }

 private:
  bool dfs(int level, const std::uint64_t* masks, const int* starts, int nclasses) {
    if (level == n1_) return true;

    std::array<signed char, 64> best_counts;
    std::array<signed char, 64> counts;
    std::array<int, 32> ties;
    int tie_count = 0;
    for (int i = 0; i < n1_; ++i) {
      if ((used_ >> i) & 1u) continue;
      int cmp = tie_count == 0 ? 1 : 0;
      for (int c = 0; c < nclasses; ++c) {
        counts[c] = static_cast<signed char>(std::popcount(rows_[i] & masks[c]));
        if (cmp == 0 && counts[c] != best_counts[c])
          cmp = counts[c] > best_counts[c] ? 1 : -1;
        if (cmp < 0) break;
      }
      if (cmp < 0) continue;
      if (cmp > 0) {
        best_counts = counts;
        ties[0] = i;
        tie_count = 1;
      } else {
        bool dup = false;
        for (int u = 0; u < tie_count; ++u)
          if (rows_[ties[u]] == rows_[i]) {
            dup = true;
            break;
          }
        if (!dup) ties[tie_count++] = i;
      }
    }

    std::uint64_t cand = 0;
    for (int c = 0; c < nclasses; ++c)
      if (best_counts[c] > 0) cand |= low_mask(best_counts[c]) << starts[c];

    std::uint64_t inp = rows_[level];
    if (cand != inp) {
      int low = std::countr_zero(cand ^ inp);
      return ((cand >> low) & 1u) == 0;  // candidate larger -> not canonical
    }

    for (int u = 0; u < tie_count; ++u) {
      std::uint64_t row = rows_[ties[u]];
      std::array<std::uint64_t, 64> nmasks;
      std::array<int, 64> nstarts;
      int ncount = 0;
      for (int c = 0; c < nclasses; ++c) {
        std::uint64_t ones = masks[c] & row;
        std::uint64_t zeros = masks[c] & ~row;
        int pos = starts[c];
        if (ones) {
          nmasks[ncount] = ones;
          nstarts[ncount] = pos;
          pos += std::popcount(ones);
          ++ncount;
        }
        if (zeros) {
          nmasks[ncount] = zeros;
          nstarts[ncount] = pos;
          ++ncount;
        }
      }
      used_ |= std::uint64_t{1} << ties[u];
      bool ok = dfs(level + 1, nmasks.data(), nstarts.data(), ncount);
      used_ &= ~(std::uint64_t{1} << ties[u]);
      if (!ok) return false;
    }
    return true;
  }

  const std::uint64_t* rows_;
  int n1_, n2_;
  std::uint64_t used_ = 0;
};

// Ordered column classes during generation. Columns of one class share their
// whole edge history, so they also share the residual degree.
struct GenClasses {
  int count = 0;
  std::array<int, 65> start;
  std::array<int, 65> len;
  std::array<int, 65> res;
  std::array<signed char, 65> prev;  // bit the previous row placed here
};

struct Prefix {
  std::array<std::uint64_t, 2> rows{0, 0};
  GenClasses classes;
  int depth = 0;
};

class OrderlyEngine {
 public:
  OrderlyEngine(const EnumSpec& spec, std::atomic<std::uint64_t>* nodes,
                std::uint64_t limit,
                const std::function<bool(const BipartiteGraph&)>* emit)
      : n1_(spec.n1), n2_(spec.n2), r_(spec.r), s_(spec.s), nodes_(nodes),
        limit_(limit), emit_(emit) {}

  // Collects the search states after `depth` placed rows.
  void collect_prefixes(int depth, std::vector<Prefix>* out) {
    collect_depth_ = depth;
    collected_ = out;
    stack_[0] = initial_classes();
    place_rows(0);
    collect_depth_ = -1;
    collected_ = nullptr;
  }

  // Runs the subtree under a collected prefix to completion.
  void run_prefix(const Prefix& p) {
    for (int i = 0; i < p.depth; ++i) rows_[i] = p.rows[i];
    stack_[p.depth] = p.classes;
    place_rows(p.depth);
  }

  // Runs the whole search in one call (used when no checkpointing splits it).
  void run_all() {
    stack_[0] = initial_classes();
    place_rows(0);
  }

  std::uint64_t generated = 0;
  std::uint64_t aux = 0;
  bool limit_hit = false;

 private:
  GenClasses initial_classes() const {
    GenClasses g;
    g.count = 1;
    g.start[0] = 0;
    g.len[0] = n2_;
    g.res[0] = s_;
    g.prev[0] = 1;
    return g;
  }

  void place_rows(int row) {
    if (limit_hit) return;
    if (row == collect_depth_) {
      Prefix p;
      p.depth = row;
      for (int i = 0; i < row; ++i) p.rows[i] = rows_[i];
      p.classes = stack_[row];
      collected_->push_back(std::move(p));
      return;
    }
    if (row == n1_) {
      finalize();
      return;
    }
    const GenClasses& cls = stack_[row];
    int* supply = supply_[row].data();
    supply[cls.count] = 0;
    for (int c = cls.count - 1; c >= 0; --c)
      supply[c] = supply[c + 1] + (cls.res[c] > 0 ? cls.len[c] : 0);
    choose(row, 0, r_, true);
  }

  void choose(int row, int c, int need, bool tight) {
    if (limit_hit) return;
    const GenClasses& cls = stack_[row];
    if (c == cls.count) {
      if (need == 0) apply_row(row);
      return;
    }
    if (need > supply_[row][c]) return;
    int maxa = cls.res[c] > 0 ? std::min(cls.len[c], need) : 0;
    if (tight && !cls.prev[c]) maxa = 0;
    for (int a = maxa; a >= 0; --a) {
      bool ntight = tight && (cls.prev[c] ? a == cls.len[c] : a == 0);
      avec_[row][c] = a;
      choose(row, c + 1, need - a, ntight);
    }
  }

  void apply_row(int row) {
    if (limit_) {
      std::uint64_t seen = nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
      if (seen > limit_) {
        limit_hit = true;
        return;
      }
    } else {
      nodes_->fetch_add(1, std::memory_order_relaxed);
    }
    const GenClasses& cls = stack_[row];
    GenClasses& ncls = stack_[row + 1];
    ncls.count = 0;
    std::uint64_t bits = 0;
    for (int c = 0; c < cls.count; ++c) {
      int a = avec_[row][c];
      if (a > 0) {
        bits |= low_mask(a) << cls.start[c];
        int k = ncls.count++;
        ncls.start[k] = cls.start[c];
        ncls.len[k] = a;
        ncls.res[k] = cls.res[c] - 1;
        ncls.prev[k] = 1;
      }
      if (a < cls.len[c]) {
        int k = ncls.count++;
        ncls.start[k] = cls.start[c] + a;
        ncls.len[k] = cls.len[c] - a;
        ncls.res[k] = cls.res[c];
        ncls.prev[k] = 0;
      }
    }
    rows_[row] = bits;

    int remaining = n1_ - row - 1;
    if (remaining > 0) {
      // Gale-Ryser with equal row sums r: for t < max residual,
      // t*r <= sum_j len_j * min(res_j, t). Larger t hold automatically.
      int max_res = 0;
      for (int c = 0; c < ncls.count; ++c) max_res = std::max(max_res, ncls.res[c]);
      if (max_res > remaining) return;
      int top = std::min(remaining, max_res - 1);
      for (int t = 1; t <= top; ++t) {
        long long rhs = 0;
        for (int c = 0; c < ncls.count; ++c)
          rhs += static_cast<long long>(ncls.len[c]) * std::min(ncls.res[c], t);
        if (static_cast<long long>(t) * r_ > rhs) return;
      }
    }
    place_rows(row + 1);
  }

  bool packed_connected() const {
    std::uint64_t reach1 = 1, reach2 = rows_[0];
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 1; i < n1_; ++i)
        if (!((reach1 >> i) & 1u) && (rows_[i] & reach2)) {
          reach1 |= std::uint64_t{1} << i;
          reach2 |= rows_[i];
          grew = true;
        }
    }
    return reach1 == low_mask(n1_) && reach2 == low_mask(n2_);
  }

  void finalize() {
    if (!packed_connected()) return;
    if (!PackedCanonChecker(rows_.data(), n1_, n2_).run()) return;
    ++generated;
    if (!emit_ || !*emit_) return;
    BipartiteGraph g(n1_, n2_);
    for (int i = 0; i < n1_; ++i) {
      std::uint64_t bits = rows_[i];
      while (bits) {
        int j = std::countr_zero(bits);
        bits &= bits - 1;
        g.set_edge(i, j);
      }
    }
    if ((*emit_)(g)) ++aux;
  }

  int n1_, n2_, r_, s_;
  std::atomic<std::uint64_t>* nodes_;
  std::uint64_t limit_;
  const std::function<bool(const BipartiteGraph&)>* emit_;
  int collect_depth_ = -1;
  std::vector<Prefix>* collected_ = nullptr;
  std::array<std::uint64_t, 33> rows_{};
  std::array<GenClasses, 34> stack_{};
  std::array<std::array<int, 65>, 33> avec_{};
  std::array<std::array<int, 66>, 33> supply_{};
};

struct CheckpointEntry {
  std::uint64_t generated = 0;
  std::uint64_t aux = 0;
};

inline std::map<std::pair<std::uint64_t, std::uint64_t>, CheckpointEntry>
read_checkpoints(std::istream& in, const EnumSpec& spec) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, CheckpointEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != "done") continue;
    int n1, n2, r, s;
    std::uint64_t r0, r1;
    CheckpointEntry e;
    ls >> n1 >> n2 >> r >> s >> std::hex >> r0 >> r1 >> std::dec >> e.generated >>
        e.aux;
    if (!ls) throw ParseError("malformed checkpoint line", 0);
    if (n1 != spec.n1 || n2 != spec.n2 || r != spec.r || s != spec.s) continue;
    out[{r0, r1}] = e;
  }
  return out;
}

inline void write_checkpoint(std::ostream& out, const EnumSpec& spec,
                             const Prefix& p, std::uint64_t generated,
                             std::uint64_t aux) {
  out << "done " << spec.n1 << ' ' << spec.n2 << ' ' << spec.r << ' ' << spec.s
      << ' ' << std::hex << p.rows[0] << ' ' << p.rows[1] << std::dec << ' '
      << generated << ' ' << aux << '\n';
  out.flush();
}

}  // namespace detail

/// Streams exactly one representative per isomorphism class to the sink.
/// The sink's boolean return is tallied into the result's aux counter (the
/// census uses it for diameter hits); sinks are invoked under a lock when
/// threads > 1 and may keep state.
inline GenerateResult generate(const EnumSpec& spec, const EnumOptions& opts,
                               const std::function<bool(const BipartiteGraph&)>& sink) {
  GenerateResult result;
  std::atomic<std::uint64_t> nodes{0};

  std::mutex emit_mu;
  std::function<bool(const BipartiteGraph&)> locked_sink;
  if (sink)
    locked_sink = [&](const BipartiteGraph& g) {
      std::lock_guard<std::mutex> lock(emit_mu);
      return sink(g);
    };
  const std::function<bool(const BipartiteGraph&)>* emit =
      sink ? &locked_sink : nullptr;

  int split_depth = std::min(2, spec.n1);
  std::vector<detail::Prefix> prefixes;
  {
    detail::OrderlyEngine collector(spec, &nodes, opts.work_limit, nullptr);
    collector.collect_prefixes(split_depth, &prefixes);
    if (collector.limit_hit) {
      result.incomplete = true;
      result.nodes = nodes.load();
      return result;
    }
  }

  std::map<std::pair<std::uint64_t, std::uint64_t>, detail::CheckpointEntry> skip;
  if (opts.resume) {
    // Rewind so the census can hand one checkpoint stream to every ladder
    // row; lines for other specs are filtered by read_checkpoints.
    opts.resume->clear();
    opts.resume->seekg(0);
    skip = detail::read_checkpoints(*opts.resume, spec);
  }

  std::vector<const detail::Prefix*> todo;
  for (const auto& p : prefixes) {
    auto it = skip.find({p.rows[0], p.rows[1]});
    if (it != skip.end()) {
      result.generated += it->second.generated;
      result.aux += it->second.aux;
    } else {
      todo.push_back(&p);
    }
  }

  std::mutex merge_mu;
  std::atomic<std::size_t> next{0};
  bool any_limit = false;

  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) break;
      const detail::Prefix& p = *todo[i];
      detail::OrderlyEngine engine(spec, &nodes, opts.work_limit, emit);
      engine.run_prefix(p);
      std::lock_guard<std::mutex> lock(merge_mu);
      result.generated += engine.generated;
      result.aux += engine.aux;
      if (engine.limit_hit) {
        any_limit = true;
      } else if (opts.checkpoint) {
        detail::write_checkpoint(*opts.checkpoint, spec, p, engine.generated,
                                 engine.aux);
      }
      if (any_limit) break;
    }
  };

  int threads = std::max(1, opts.threads);
  if (threads == 1 || todo.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  result.incomplete = any_limit;
  result.nodes = nodes.load();
  return result;
}

namespace detail {

/// Exact diameter of a packed biregular graph, or cap+1 once any
/// eccentricity exceeds cap, or -1 when disconnected.
inline int packed_diameter(const std::uint64_t* rows, int n1, int n2, int cap) {
  std::array<std::uint64_t, 64> cols{};
  for (int i = 0; i < n1; ++i) {
    std::uint64_t bits = rows[i];
    while (bits) {
      int j = std::countr_zero(bits);
      bits &= bits - 1;
      cols[j] |= std::uint64_t{1} << i;
    }
  }
  std::uint64_t full1 = low_mask(n1), full2 = low_mask(n2);
  int diam = 0;
  for (int side = 1; side <= 2; ++side) {
    int limit = side == 1 ? n1 : n2;
    for (int src = 0; src < limit; ++src) {
      std::uint64_t reach1 = 0, reach2 = 0, frontier;
      bool on_side1 = side == 1;
      if (on_side1)
        reach1 = frontier = std::uint64_t{1} << src;
      else
        reach2 = frontier = std::uint64_t{1} << src;
      int dist = 0;
      while (reach1 != full1 || reach2 != full2) {
        std::uint64_t next = 0, f = frontier;
        if (on_side1) {
          while (f) {
            int i = std::countr_zero(f);
            f &= f - 1;
            next |= rows[i];
          }
          next &= ~reach2;
          reach2 |= next;
        } else {
          while (f) {
            int j = std::countr_zero(f);
            f &= f - 1;
            next |= cols[j];
          }
          next &= ~reach1;
          reach1 |= next;
        }
        if (next == 0) return -1;
        frontier = next;
        on_side1 = !on_side1;
        if (++dist > cap) return cap + 1;
      }
      diam = std::max(diam, dist);
    }
  }
  return diam;
}

inline int packed_diameter(const BipartiteGraph& g, int cap) {
  std::array<std::uint64_t, 33> rows;
  for (int i = 0; i < g.n1(); ++i) rows[i] = g.row(i)[0];
  return packed_diameter(rows.data(), g.n1(), g.n2(), cap);
}

}  // namespace detail

/// Walks the (n1, n2) = (t*sigma, t*rho) ladder downward from the plain
/// Moore cap, generating and diameter-filtering at each order, and stops at
/// the first order where diameter-d graphs exist. Work-limit hits flag the
/// report INCOMPLETE and the ladder continues.
inline std::vector<EnumReport> census(int r, int s, int d, const EnumOptions& opts) {
  if (s < 2 || r <= s)
    throw Error(Errc::bad_input, "census needs r > s >= 2");
  if (d < 3) throw Error(Errc::bad_input, "census needs d >= 3");
  Params p(r, s, d);
  BoundResult bound = best_bound(p);
  Int t_start = p.odd_diameter() ? bound.plain_total / (p.rho + p.sigma)
                                 : bound.n1_max / p.sigma;
  int g = r / p.rho;  // gcd(r, s); below t = g one side drops under a degree
  std::vector<EnumReport> out;
  for (Int t = t_start; t >= g; --t) {
    Int big_n1 = t * p.sigma, big_n2 = t * p.rho;
    if (big_n1 > 32 || big_n2 > 64)
      throw Error(Errc::too_large,
                  "census ladder starts beyond the enumeration guardrail");
    EnumSpec spec(static_cast<int>(big_n1), static_cast<int>(big_n2), r, s, d);
    EnumReport report;
    report.t = t;
    report.n1 = spec.n1;
    report.n2 = spec.n2;
    auto t0 = std::chrono::steady_clock::now();
    auto sink = [&](const BipartiteGraph& gg) {
      if (detail::packed_diameter(gg, d) != d) return false;
      if (static_cast<int>(report.representatives.size()) < opts.max_representatives)
        report.representatives.push_back(gg);
      return true;
    };
    GenerateResult gen = generate(spec, opts, sink);
    report.generated = gen.generated;
    report.with_diameter = gen.aux;
    report.incomplete = gen.incomplete;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::sort(report.representatives.begin(), report.representatives.end(),
              [](const BipartiteGraph& a, const BipartiteGraph& b) {
                return a.compare_bits(b) > 0;
              });
    out.push_back(std::move(report));
    if (out.back().with_diameter > 0) break;
  }
  return out;
}

/// True when G is, up to isomorphism, the single diameter-d graph of its
/// parameters. Runs the enumeration at G's exact side sizes; an incomplete
/// run cannot decide and raises WORK_LIMIT.
inline bool verify_uniqueness(const BipartiteGraph& g, const EnumSpec& spec,
                              const EnumOptions& opts = {}) {
  BipartiteGraph oriented = g;
  if (g.n1() == spec.n2 && g.n2() == spec.n1 && g.n1() != spec.n1)
    oriented = g.transposed();
  if (oriented.n1() != spec.n1 || oriented.n2() != spec.n2)
    throw Error(Errc::param_mismatch, "graph sides do not match the spec");
  for (int i = 0; i < oriented.n1(); ++i)
    if (oriented.row_degree(i) != spec.r)
      throw Error(Errc::param_mismatch, "side-1 degrees do not match the spec");
  for (int deg : oriented.column_degrees())
    if (deg != spec.s)
      throw Error(Errc::param_mismatch, "side-2 degrees do not match the spec");
  auto dm = diameter(oriented);
  if (!dm || *dm != spec.d)
    throw Error(Errc::param_mismatch, "graph diameter does not match the spec");

  std::uint64_t hits = 0;
  std::optional<BipartiteGraph> witness;
  auto sink = [&](const BipartiteGraph& gg) {
    if (detail::packed_diameter(gg, spec.d) != spec.d) return false;
    if (!witness) witness = gg;
    return true;
  };
  GenerateResult gen = generate(spec, opts, sink);
  hits = gen.aux;
  if (gen.incomplete)
    throw Error(Errc::work_limit,
                "uniqueness is undecided: enumeration hit its work limit");
  if (hits != 1 || !witness) return false;
  return canonical_key(*witness) == canonical_key(oriented);
}

}  // namespace bimoore
