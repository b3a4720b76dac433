#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimoore/bipartite_graph.hpp"
#include "bimoore/bounds.hpp"
#include "bimoore/errors.hpp"
#include "bimoore/gf.hpp"
#include "bimoore/metrics.hpp"

namespace bimoore {

inline BipartiteGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw Error(Errc::too_small, "complete_bipartite needs a, b >= 1");
  BipartiteGraph g(a, b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.set_edge(i, j);
  return g;
}

/// C_n for even n, sides alternating around the cycle. Labels follow the
/// u1, 2, u3, 4, ... pattern, so C6 carries sides {u1,u3,u5} and {2,4,6}.
inline BipartiteGraph even_cycle(int n) {
  if (n % 2 != 0) throw Error(Errc::bad_input, "even_cycle needs an even order");
  if (n < 4) throw Error(Errc::too_small, "even_cycle needs n >= 4");
  int t = n / 2;
  BipartiteGraph g(t, t);
  std::vector<std::string> l1(t), l2(t);
  for (int i = 0; i < t; ++i) {
    g.set_edge(i, i);
    g.set_edge(i, (i + t - 1) % t);
    l1[i] = "u" + std::to_string(2 * i + 1);
    l2[i] = std::to_string(2 * i + 2);
  }
  g.set_side_labels(1, l1);
  g.set_side_labels(2, l2);
  return g;
}

namespace detail {

// Normalized projective point representatives of GF(q)^dim: the first
// nonzero coordinate is 1. Lexicographic enumeration keeps builds stable.
inline std::vector<std::vector<int>> projective_points(const GaloisField& F, int dim) {
  std::vector<std::vector<int>> pts;
  std::vector<int> v(dim, 0);
  while (true) {
    int first = -1;
    for (int i = 0; i < dim; ++i)
      if (v[i] != 0) {
        first = i;
        break;
      }
    if (first >= 0 && v[first] == 1) pts.push_back(v);
    int i = dim - 1;
    while (i >= 0 && v[i] == F.q() - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return pts;
}

inline std::string tuple_label(const std::vector<int>& v, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(v[i]);
  }
  out.push_back(close);
  return out;
}

}  // namespace detail

/// Incidence graph of the projective plane PG(2,q): points against lines,
/// adjacency by containment (zero dot product in the dual model).
inline BipartiteGraph projective_plane(int q) {
  const GaloisField& F = GaloisField::get(q);
  auto pts = detail::projective_points(F, 3);
  int n = static_cast<int>(pts.size());
  BipartiteGraph g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int acc = 0;
      for (int c = 0; c < 3; ++c) acc = F.add(acc, F.mul(pts[i][c], pts[j][c]));
      if (acc == 0) g.set_edge(i, j);
    }
  std::vector<std::string> l1(n), l2(n);
  for (int i = 0; i < n; ++i) {
    l1[i] = "P" + detail::tuple_label(pts[i], '(', ')');
    l2[i] = "L" + detail::tuple_label(pts[i], '[', ']');
  }
  g.set_side_labels(1, l1);
  g.set_side_labels(2, l2);
  return g;
}

/// Incidence graph of the symplectic generalized quadrangle W(q): all points
/// of PG(3,q) against the lines that are totally isotropic for the
/// alternating form x0*y1 - x1*y0 + x2*y3 - x3*y2.
inline BipartiteGraph symplectic_quadrangle(int q) {
  if (q != 2 && q != 3 && q != 4 && q != 5)
    throw Error(Errc::unsupported_order,
                "symplectic quadrangle builder covers q in {2,3,4,5}");
  const GaloisField& F = GaloisField::get(q);
  auto pts = detail::projective_points(F, 4);
  int n = static_cast<int>(pts.size());
  std::map<std::vector<int>, int> point_index;
  for (int i = 0; i < n; ++i) point_index.emplace(pts[i], i);

  auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
    int a = F.sub(F.mul(x[0], y[1]), F.mul(x[1], y[0]));
    int b = F.sub(F.mul(x[2], y[3]), F.mul(x[3], y[2]));
    return F.add(a, b);
  };
  auto normalize = [&](std::vector<int> v) {
    int first = 0;
    while (v[first] == 0) ++first;
    int scale = F.inv(v[first]);
    for (int& c : v) c = F.mul(c, scale);
    return v;
  };

  // Every isotropic pair spans a totally isotropic line (the form is
  // bilinear and alternating); collect each line once as its point set.
  std::set<std::vector<int>> lines;
  std::vector<int> line;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (form(pts[i], pts[j]) != 0) continue;
      line.clear();
      line.push_back(i);
      for (int a = 0; a < q; ++a) {
        std::vector<int> v(4);
        for (int c = 0; c < 4; ++c) v[c] = F.add(F.mul(a, pts[i][c]), pts[j][c]);
        line.push_back(point_index.at(normalize(std::move(v))));
      }
      std::sort(line.begin(), line.end());
      lines.insert(line);
    }

  BipartiteGraph g(n, static_cast<int>(lines.size()));
  int j = 0;
  for (const auto& l : lines) {
    for (int p : l) g.set_edge(p, j);
    ++j;
  }
  std::vector<std::string> l1(n);
  for (int i = 0; i < n; ++i) l1[i] = "P" + detail::tuple_label(pts[i], '(', ')');
  g.set_side_labels(1, l1);
  return g;
}

/// S(G): one new degree-2 vertex in the middle of every edge. Side 1 holds
/// the original vertices (both old sides, side 1 first), side 2 the edge
/// vertices; the result is (r,2)-biregular with twice the diameter.
inline BipartiteGraph subdivision(const BipartiteGraph& g) {
  auto bireg = is_biregular(g);
  if (!bireg || bireg->first != bireg->second)
    throw Error(Errc::not_regular, "subdivision needs a regular input graph");
  if (bireg->first < 2)
    throw Error(Errc::too_small, "subdivision needs degree >= 2");
  if (!is_connected(g))
    throw Error(Errc::bad_input, "subdivision needs a connected input graph");
  long long m = g.edge_count();
  BipartiteGraph out(g.order(), static_cast<int>(m));
  int e = 0;
  for (int i = 0; i < g.n1(); ++i)
    for (int j : g.row_neighbors(i)) {
      out.set_edge(i, e);
      out.set_edge(g.n1() + j, e);
      ++e;
    }
  return out;
}

/// G^{kV_side}: every vertex of the chosen side is replaced by k clones with
/// identical neighborhoods. The cloned side becomes side 1 of the output
/// unless cloned_side_first is false. Diameter is preserved (inputs need
/// diameter >= 2 for that to hold).
inline BipartiteGraph k_tuple(const BipartiteGraph& g, int side, int k,
                              bool cloned_side_first = true) {
  if (k < 2) throw Error(Errc::bad_multiplicity, "k_tuple needs k >= 2");
  if (side != 1 && side != 2)
    throw Error(Errc::bad_input, "side must be 1 or 2");
  if (side == 2) return k_tuple(g.transposed(), 1, k, cloned_side_first);
  if (!is_connected(g))
    throw Error(Errc::bad_input, "k_tuple needs a connected input graph");
  auto diam = diameter(g);
  if (!diam || *diam < 2)
    throw Error(Errc::too_small, "k_tuple needs input diameter >= 2");
  BipartiteGraph out(k * g.n1(), g.n2());
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < g.n1(); ++i)
      for (int j : g.row_neighbors(i)) out.set_edge(c * g.n1() + i, j);
  const auto& l1 = g.side_labels(1);
  if (!l1.empty()) {
    std::vector<std::string> nl(static_cast<std::size_t>(k) * g.n1());
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < g.n1(); ++i)
        nl[static_cast<std::size_t>(c) * g.n1() + i] =
            c == 0 ? l1[i] : l1[i] + "_" + std::to_string(c);
    out.set_side_labels(1, nl);
  }
  if (!g.side_labels(2).empty()) out.set_side_labels(2, g.side_labels(2));
  return cloned_side_first ? out : out.transposed();
}

inline BipartiteGraph semi_double(const BipartiteGraph& g, int side,
                                  bool cloned_side_first = true) {
  return k_tuple(g, side, 2, cloned_side_first);
}

/// The diameter-3 graph G_{6+n} on sides Z6 x Z_n: (0,j) ~ (1,i) iff
/// j = i, i+1, or i+3 (mod 6). Side 2 is 3-regular; side 1 degrees follow
/// the residue of n mod 6.
inline BipartiteGraph g_6n(int n) {
  if (n < 6) throw Error(Errc::too_small, "g_6n needs n >= 6");
  BipartiteGraph g(6, n);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < n; ++i) {
      int d = ((j - i) % 6 + 6) % 6;
      if (d == 0 || d == 1 || d == 3) g.set_edge(j, i);
    }
  std::vector<std::string> l1(6), l2(n);
  for (int j = 0; j < 6; ++j) l1[j] = "(0," + std::to_string(j) + ")";
  for (int i = 0; i < n; ++i) l2[i] = "(1," + std::to_string(i) + ")";
  g.set_side_labels(1, l1);
  g.set_side_labels(2, l2);
  return g;
}

/// G'_r: G_{6+2r} with the edge (0,3)~(1,0) replaced by (0,5)~(1,0). For
/// r = 2 (mod 3) this evens out the side-1 degrees, giving an (r,3)-biregular
/// diameter-3 graph whose order 2r+6 meets the Moore bound.
inline BipartiteGraph g_prime_r(int r) {
  if (r < 5) throw Error(Errc::too_small, "g_prime_r needs r >= 5");
  if (r % 3 != 2)
    throw Error(Errc::unsupported_residue,
                "g_prime_r is defined for r = 2 (mod 3)");
  BipartiteGraph g = g_6n(2 * r);
  g.clear_edge(3, 0);
  g.set_edge(5, 0);
  return g;
}

/// Validates an externally supplied graph as an [r;d]-Moore bipartite graph:
/// r-regular, connected, exact diameter, girth 2d, order on the bound.
inline void require_moore_bipartite(const BipartiteGraph& g, int r, int d) {
  auto bireg = is_biregular(g);
  if (!bireg || bireg->first != r || bireg->second != r)
    throw Error(Errc::param_mismatch,
                "input graph is not " + std::to_string(r) + "-regular");
  if (!is_connected(g))
    throw Error(Errc::param_mismatch, "input graph is disconnected");
  auto dm = diameter(g);
  if (!dm || *dm != d)
    throw Error(Errc::param_mismatch,
                "input graph diameter is not " + std::to_string(d));
  if (Int(g.order()) != classical_bipartite_total(r, d))
    throw Error(Errc::param_mismatch,
                "input graph order is off the [" + std::to_string(r) + ";" +
                    std::to_string(d) + "] Moore bound");
  auto gi = girth(g);
  if (!gi || *gi != 2 * d)
    throw Error(Errc::param_mismatch,
                "input graph girth is not " + std::to_string(2 * d));
}

/// [2r,r;d]-biregular family: the semi-double of the degree-r incidence
/// graph of diameter d (projective plane, symplectic quadrangle, or an
/// externally supplied generalized-hexagon incidence graph for d=6).
inline BipartiteGraph family_r_2r(int r, int d,
                                  const BipartiteGraph* hexagon = nullptr) {
  if (r < 3) throw Error(Errc::too_small, "family_r_2r needs r >= 3");
  if (d == 3) return semi_double(projective_plane(r - 1), 1);
  if (d == 4) return semi_double(symplectic_quadrangle(r - 1), 1);
  if (d == 6) {
    if (!hexagon)
      throw Error(Errc::needs_input,
                  "d=6 needs an externally supplied [" + std::to_string(r) +
                      ";6]-Moore bipartite graph (graph6 or biadjacency)");
    require_moore_bipartite(*hexagon, r, 6);
    return semi_double(*hexagon, 1);
  }
  throw Error(Errc::bad_input, "family_r_2r supports d in {3,4,6}");
}

/// [r,2;2m]-bimoore family: the subdivision of an [r;m]-Moore bipartite
/// graph. Orders match moore_even(r,2;2m) exactly, so the defect is 0.
inline BipartiteGraph moore_r2(int r, int m,
                               const BipartiteGraph* hexagon = nullptr) {
  if (r < 3) throw Error(Errc::too_small, "moore_r2 needs r >= 3");
  if (m == 3) return subdivision(projective_plane(r - 1));
  if (m == 4) return subdivision(symplectic_quadrangle(r - 1));
  if (m == 6) {
    if (!hexagon)
      throw Error(Errc::needs_input,
                  "m=6 needs an externally supplied [" + std::to_string(r) +
                      ";6]-Moore bipartite graph (graph6 or biadjacency)");
    require_moore_bipartite(*hexagon, r, 6);
    return subdivision(*hexagon);
  }
  throw Error(Errc::bad_input, "moore_r2 supports m in {3,4,6}");
}

// Post-build expectations, used by tests and the CLI's --check flag.

struct ExpectedParams {
  std::optional<long long> order;
  std::optional<std::pair<int, int>> degrees;  // descending (r, s)
  std::optional<int> diameter;
  std::optional<int> girth;
};

inline std::vector<std::string> check_expected(const BipartiteGraph& g,
                                               const ExpectedParams& e) {
  std::vector<std::string> bad;
  if (e.order && g.order() != *e.order)
    bad.push_back("order " + std::to_string(g.order()) + ", expected " +
                  std::to_string(*e.order));
  if (e.degrees && !matches_degrees(g, e.degrees->first, e.degrees->second))
    bad.push_back("degrees are not (" + std::to_string(e.degrees->first) + "," +
                  std::to_string(e.degrees->second) + ")");
  if (e.diameter) {
    auto dm = diameter(g);
    if (!dm || *dm != *e.diameter)
      bad.push_back("diameter " + (dm ? std::to_string(*dm) : std::string("inf")) +
                    ", expected " + std::to_string(*e.diameter));
  }
  if (e.girth) {
    auto gi = girth(g);
    if (!gi || *gi != *e.girth)
      bad.push_back("girth " + (gi ? std::to_string(*gi) : std::string("none")) +
                    ", expected " + std::to_string(*e.girth));
  }
  return bad;
}

struct ConstructionRecipe {
  std::string name;
  std::vector<int> params;
  ExpectedParams expected;
};

namespace detail {

inline int param_at(const std::vector<int>& params, std::size_t i, const char* what) {
  if (i >= params.size())
    throw Error(Errc::bad_input, std::string("missing parameter: ") + what);
  return params[i];
}

}  // namespace detail

/// Builds a family by registry name. Transforms (subdivision, semi-double,
/// k-tuple) are not in the registry; apply them to a built graph directly.
inline BipartiteGraph build_named(const std::string& name, const std::vector<int>& params,
                                  const BipartiteGraph* external = nullptr) {
  using detail::param_at;
  if (name == "complete-bipartite")
    return complete_bipartite(param_at(params, 0, "a"), param_at(params, 1, "b"));
  if (name == "cycle") return even_cycle(param_at(params, 0, "n"));
  if (name == "projective-plane") return projective_plane(param_at(params, 0, "q"));
  if (name == "symplectic-quadrangle")
    return symplectic_quadrangle(param_at(params, 0, "q"));
  if (name == "g6n") return g_6n(param_at(params, 0, "n"));
  if (name == "g-prime") return g_prime_r(param_at(params, 0, "r"));
  if (name == "family-r-2r")
    return family_r_2r(param_at(params, 0, "r"), param_at(params, 1, "d"), external);
  if (name == "moore-r2")
    return moore_r2(param_at(params, 0, "r"), param_at(params, 1, "m"), external);
  if (name == "heawood" || name == "fano") return projective_plane(2);
  if (name == "tutte-coxeter") return symplectic_quadrangle(2);
  if (name == "k33") return complete_bipartite(3, 3);
  if (name == "k44") return complete_bipartite(4, 4);
  if (name == "c6") return even_cycle(6);
  throw Error(Errc::bad_input, "unknown construction: " + name);
}

inline std::vector<std::string> known_constructions() {
  return {"complete-bipartite", "cycle",  "projective-plane",
          "symplectic-quadrangle", "g6n", "g-prime",
          "family-r-2r", "moore-r2", "heawood", "fano",
          "tutte-coxeter", "k33", "k44", "c6"};
}

/// Closed-form expectations for a registry entry, when the family has them.
inline std::optional<ExpectedParams> expected_for(const std::string& name,
                                                  const std::vector<int>& params) {
  using detail::param_at;
  ExpectedParams e;
  if (name == "heawood" || name == "fano") {
    e = {14, {{3, 3}}, 3, 6};
  } else if (name == "tutte-coxeter") {
    e = {30, {{3, 3}}, 4, 8};
  } else if (name == "k33") {
    e = {6, {{3, 3}}, 2, 4};
  } else if (name == "k44") {
    e = {8, {{4, 4}}, 2, 4};
  } else if (name == "c6") {
    e = {6, {{2, 2}}, 3, 6};
  } else if (name == "complete-bipartite") {
    int a = param_at(params, 0, "a"), b = param_at(params, 1, "b");
    e.order = a + b;
    e.degrees = {std::max(a, b), std::min(a, b)};
    if (a >= 2 && b >= 2) {
      e.diameter = 2;
      e.girth = 4;
    }
  } else if (name == "cycle") {
    int n = param_at(params, 0, "n");
    e = {n, {{2, 2}}, n / 2, n};
  } else if (name == "projective-plane") {
    int q = param_at(params, 0, "q");
    e = {2LL * (q * q + q + 1), {{q + 1, q + 1}}, 3, 6};
  } else if (name == "symplectic-quadrangle") {
    int q = param_at(params, 0, "q");
    e = {2LL * (q + 1) * (q * q + 1), {{q + 1, q + 1}}, 4, 8};
  } else if (name == "g6n") {
    int n = param_at(params, 0, "n");
    e.order = n + 6;
    e.diameter = 3;
    if (n % 6 == 0) e.degrees = {n / 2, 3};
    if (n >= 7) e.girth = 4;
  } else if (name == "g-prime") {
    int r = param_at(params, 0, "r");
    e = {2LL * r + 6, {{r, 3}}, 3, 4};
  } else if (name == "family-r-2r") {
    int r = param_at(params, 0, "r"), d = param_at(params, 1, "d");
    int q = r - 1;
    if (d == 3)
      e.order = 3LL * (q * q + q + 1);
    else if (d == 4)
      e.order = 3LL * (q + 1) * (q * q + 1);
    else if (d == 6)
      e.order = 3 * static_cast<long long>(classical_bipartite_total(r, 6)) / 2;
    e.degrees = {2 * r, r};
    e.diameter = d;
  } else if (name == "moore-r2") {
    int r = param_at(params, 0, "r"), m = param_at(params, 1, "m");
    e.order = static_cast<long long>(moore_even(Params(r, 2, 2 * m)).total);
    e.degrees = {r, 2};
    e.diameter = 2 * m;
    e.girth = 4 * m;
  } else {
    return std::nullopt;
  }
  return e;
}

}  // namespace bimoore
