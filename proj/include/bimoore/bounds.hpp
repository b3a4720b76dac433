#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bimoore/bipartite_graph.hpp"
#include "bimoore/errors.hpp"
#include "bimoore/metrics.hpp"

namespace bimoore {

using Int = boost::multiprecision::cpp_int;

// Degree/diameter parameters of a biregular bipartite graph. V1 is the side
// whose vertices have the larger degree r, V2 the side with degree s, so
// r*|V1| = s*|V2| for any realization.
struct Params {
  int r, s, d;
  int m;            // half-diameter: d = 2m or d = 2m+1
  int rho, sigma;   // r/gcd(r,s) and s/gcd(r,s), coprime

  Params(int r_, int s_, int d_) : r(r_), s(s_), d(d_) {
    if (s < 2 || r < s)
      throw Error(Errc::bad_input, "degrees must satisfy r >= s >= 2");
    if (d < 2) throw Error(Errc::bad_input, "diameter must be at least 2");
    m = d / 2;
    int g = std::gcd(r, s);
    rho = r / g;
    sigma = s / g;
  }

  bool odd_diameter() const { return d % 2 != 0; }
};

enum class Regime { even, odd_plain, odd_improved, odd_regular };

inline const char* regime_name(Regime x) {
  switch (x) {
    case Regime::even: return "EVEN";
    case Regime::odd_plain: return "ODD_PLAIN";
    case Regime::odd_improved: return "ODD_IMPROVED";
    case Regime::odd_regular: return "ODD_REGULAR";
  }
  return "UNKNOWN";
}

struct BoundResult {
  Params params;
  Regime regime;
  Int n1_max, n2_max;  // caps on |V1| and |V2|
  Int total;           // the Moore bound M(r,s;d)
  Int plain_total;     // value before the divisibility improvement
  Int n1_raw, n2_raw;  // N1', N2' for odd d; equal to the caps for even d
  Int t;               // odd d: caps are (t*sigma, t*rho); 0 for even d
};

namespace detail {

// 1 + J + ... + J^{m-1}, i.e. (J^m - 1)/(J - 1); equals m when J = 1.
inline Int geometric_series(const Int& J, int m) {
  Int acc = 0, p = 1;
  for (int i = 0; i < m; ++i) {
    acc += p;
    p *= J;
  }
  return acc;
}

}  // namespace detail

/// Classical bipartite Moore bound 2*(1 + (r-1) + ... + (r-1)^(d-1)) for
/// r-regular bipartite graphs of diameter d.
inline Int classical_bipartite_total(int r, int d) {
  if (r < 2 || d < 2) throw Error(Errc::bad_input, "need r >= 2 and d >= 2");
  return 2 * detail::geometric_series(r - 1, d);
}

inline BoundResult moore_even(const Params& p) {
  if (p.odd_diameter())
    throw Error(Errc::bad_input, "moore_even needs an even diameter");
  BoundResult out{p, Regime::even, 0, 0, 0, 0, 0, 0, 0};
  Int J = Int(p.r - 1) * (p.s - 1);
  if (J == 1) {
    // r = s = 2: the bound degenerates to the cycle C_{2d}.
    out.n1_max = p.d;
    out.n2_max = p.d;
  } else {
    Int series = detail::geometric_series(J, p.m);
    out.n1_max = p.s * series;
    out.n2_max = p.r * series;
  }
  out.total = out.n1_max + out.n2_max;
  out.plain_total = out.total;
  out.n1_raw = out.n1_max;
  out.n2_raw = out.n2_max;
  return out;
}

/// Per-side counting caps (N1', N2') for odd diameter: the number of V1
/// vertices within distance d of a V1 vertex, and likewise for V2.
inline std::pair<Int, Int> partite_caps_odd(const Params& p) {
  if (!p.odd_diameter())
    throw Error(Errc::bad_input, "partite_caps_odd needs an odd diameter");
  Int J = Int(p.r - 1) * (p.s - 1);
  Int Q = detail::geometric_series(J, p.m);
  Int n1 = 1 + Int(p.r) * (p.s - 1) * Q;
  Int n2 = 1 + Int(p.s) * (p.r - 1) * Q;
  return {n1, n2};
}

/// True iff rho divides s*Q - 1, the hypothesis under which the odd-diameter
/// bound improves by one full block of rho + sigma vertices. For m = 1 this
/// reduces to rho | (s - 1).
inline bool improvement_applies(const Params& p) {
  if (!p.odd_diameter())
    throw Error(Errc::bad_input, "improvement_applies needs an odd diameter");
  Int J = Int(p.r - 1) * (p.s - 1);
  Int Q = detail::geometric_series(J, p.m);
  return (Int(p.s) * Q - 1) % p.rho == 0;
}

inline BoundResult moore_odd(const Params& p) {
  if (!p.odd_diameter())
    throw Error(Errc::bad_input, "moore_odd needs an odd diameter");
  if (p.r <= p.s)
    throw Error(Errc::regular_case,
                "odd-diameter biregular bounds need r > s; equal degrees fall "
                "under the classical bipartite bound");
  auto [n1_raw, n2_raw] = partite_caps_odd(p);
  bool improved = improvement_applies(p);
  Int t_plain = n2_raw / p.rho;  // floor: both sides positive
  Int t = t_plain;
  if (improved) {
    // rho | s*Q - 1 forces rho | N2' (N2' = 1 + s(r-1)Q with rho | r), so the
    // plain cap sits exactly at t_plain blocks and one block must be removed.
    if (n2_raw % p.rho != 0)
      throw Error(Errc::bad_input, "internal: improvement without rho | N2'");
    t = t_plain - 1;
  }
  BoundResult out{p, improved ? Regime::odd_improved : Regime::odd_plain,
                  0, 0, 0, 0, 0, 0, 0};
  out.n1_max = t * p.sigma;
  out.n2_max = t * p.rho;
  out.total = t * (p.rho + p.sigma);
  out.plain_total = t_plain * (p.rho + p.sigma);
  out.n1_raw = n1_raw;
  out.n2_raw = n2_raw;
  out.t = t;
  return out;
}

inline BoundResult best_bound(const Params& p) {
  if (!p.odd_diameter()) return moore_even(p);
  if (p.r > p.s) return moore_odd(p);
  // Equal degrees with odd diameter: report the classical bipartite bound.
  BoundResult out{p, Regime::odd_regular, 0, 0, 0, 0, 0, 0, 0};
  out.total = classical_bipartite_total(p.r, p.d);
  out.n1_max = out.total / 2;
  out.n2_max = out.total / 2;
  out.plain_total = out.total;
  auto raw = partite_caps_odd(p);
  out.n1_raw = raw.first;
  out.n2_raw = raw.second;
  return out;
}

/// How far G falls short of the Moore bound for p. G must actually be an
/// [r,s;d]-graph (degrees up to side order, exact diameter).
inline Int defect(const BipartiteGraph& g, const Params& p) {
  if (!matches_degrees(g, p.r, p.s))
    throw Error(Errc::param_mismatch, "graph is not [" + std::to_string(p.r) + "," +
                                          std::to_string(p.s) + "]-biregular");
  std::optional<int> diam = diameter(g);
  if (!diam || *diam != p.d)
    throw Error(Errc::param_mismatch,
                "graph diameter " + (diam ? std::to_string(*diam) : std::string("inf")) +
                    " does not match d=" + std::to_string(p.d));
  return best_bound(p).total - g.order();
}

/// Best caps for the orders of a [rho*s, s; 3] graph with rho >= 2.
inline std::pair<Int, Int> multiple_degree_caps(int s, int rho) {
  if (s < 2 || rho < 2)
    throw Error(Errc::bad_input, "multiple_degree_caps needs s >= 2 and rho >= 2");
  Int s2 = Int(s) * s;
  if ((s - 1) % rho == 0) {
    Int n1 = (s2 - 1) - (s - 1) / rho;
    Int n2 = rho * (s2 - 1) - (s - 1);
    return {n1, n2};
  }
  Int base = s2 - (s + rho - 1) / rho;  // s^2 - ceil(s/rho)
  return {base, rho * base};
}

/// Nonexistence flag for [2s, s; 3]-bimoore graphs with s odd: the plain
/// bound is never attained because the improvement condition holds.
inline bool no_2s_s_bimoore(int s) {
  if (s < 3 || s % 2 == 0)
    throw Error(Errc::not_applicable, "the [2s,s;3] nonexistence result needs odd s >= 3");
  return improvement_applies(Params(2 * s, s, 3));
}

// Bound tables over a parameter grid (lower triangle r >= s).

struct BoundTableCell {
  BoundResult bound;
  std::string note;  // set on cells where external results sharpen the formula
};

struct BoundTable {
  int d;
  std::vector<int> r_values, s_values;
  // rows[i][j] covers (r_values[i], s_values[j]); empty above the diagonal
  std::vector<std::vector<std::optional<BoundTableCell>>> rows;
};

inline BoundTable emit_bound_table(int d, int r_lo, int r_hi, int s_lo, int s_hi) {
  if (r_lo < 2 || s_lo < 2 || r_hi < r_lo || s_hi < s_lo || d < 2)
    throw Error(Errc::bad_input, "bad table ranges");
  BoundTable table;
  table.d = d;
  for (int r = r_lo; r <= r_hi; ++r) table.r_values.push_back(r);
  for (int s = s_lo; s <= s_hi; ++s) table.s_values.push_back(s);
  table.rows.resize(table.r_values.size());
  for (std::size_t i = 0; i < table.r_values.size(); ++i) {
    table.rows[i].resize(table.s_values.size());
    for (std::size_t j = 0; j < table.s_values.size(); ++j) {
      int r = table.r_values[i], s = table.s_values[j];
      if (s > r) continue;
      BoundTableCell cell{best_bound(Params(r, s, d)), ""};
      if (r == 7 && s == 7 && d == 4)
        cell.note = "external nonexistence results sharpen this to 516";
      if (r == 7 && s == 7 && d == 6)
        cell.note = "external nonexistence results sharpen this to 18660";
      table.rows[i][j] = std::move(cell);
    }
  }
  return table;
}

inline std::string render_bound_table_text(const BoundTable& table) {
  std::size_t nr = table.r_values.size(), ns = table.s_values.size();
  std::vector<std::vector<std::string>> cells(nr + 1, std::vector<std::string>(ns + 1));
  cells[0][0] = "d=" + std::to_string(table.d);
  for (std::size_t j = 0; j < ns; ++j)
    cells[0][j + 1] = "s=" + std::to_string(table.s_values[j]);
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < nr; ++i) {
    cells[i + 1][0] = "r=" + std::to_string(table.r_values[i]);
    for (std::size_t j = 0; j < ns; ++j) {
      const auto& cell = table.rows[i][j];
      if (!cell) continue;
      std::ostringstream os;
      os << cell->bound.total;
      if (cell->bound.regime == Regime::odd_improved)
        os << " (" << cell->bound.plain_total << ")";
      if (!cell->note.empty()) {
        os << " *" << notes.size() + 1;
        notes.push_back("*" + std::to_string(notes.size() + 1) + " (" +
                        std::to_string(table.r_values[i]) + "," +
                        std::to_string(table.s_values[j]) + "): " + cell->note);
      }
      cells[i + 1][j + 1] = os.str();
    }
  }
  std::vector<std::size_t> widths(ns + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j <= ns; ++j) widths[j] = std::max(widths[j], row[j].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j <= ns; ++j) {
      std::string pad(widths[j] - row[j].size(), ' ');
      os << row[j] << pad << (j == ns ? "" : "  ");
    }
    os << '\n';
  }
  for (const auto& note : notes) os << note << '\n';
  return os.str();
}

inline std::string render_bound_table_csv(const BoundTable& table) {
  std::ostringstream os;
  os << "r\\s";
  for (int s : table.s_values) os << ',' << s;
  os << '\n';
  for (std::size_t i = 0; i < table.r_values.size(); ++i) {
    os << table.r_values[i];
    for (std::size_t j = 0; j < table.s_values.size(); ++j) {
      os << ',';
      const auto& cell = table.rows[i][j];
      if (!cell) continue;
      if (cell->bound.regime == Regime::odd_improved)
        os << "improved:" << cell->bound.plain_total << "->" << cell->bound.total;
      else
        os << cell->bound.total;
    }
    os << '\n';
  }
  for (std::size_t i = 0; i < table.r_values.size(); ++i)
    for (std::size_t j = 0; j < table.s_values.size(); ++j)
      if (table.rows[i][j] && !table.rows[i][j]->note.empty())
        os << "# (" << table.r_values[i] << ',' << table.s_values[j]
           << "): " << table.rows[i][j]->note << '\n';
  return os.str();
}

}  // namespace bimoore
