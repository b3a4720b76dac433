#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "bimoore/bounds.hpp"
#include "bimoore/canonical.hpp"
#include "bimoore/constructions.hpp"

using namespace bimoore;

namespace {

int common_neighbors(const BipartiteGraph& g, int a, int b) {
  auto na = g.row_neighbors(a);
  auto nb = g.row_neighbors(b);
  std::set<int> sa(na.begin(), na.end());
  int c = 0;
  for (int j : nb) c += sa.count(j);
  return c;
}

}  // namespace

TEST_CASE("classical seeds") {
  auto k34 = complete_bipartite(3, 4);
  REQUIRE(k34.n1() == 3);
  REQUIRE(k34.n2() == 4);
  REQUIRE(k34.edge_count() == 12);
  REQUIRE(diameter(k34) == 2);
  REQUIRE(girth(k34) == 4);

  auto c6 = even_cycle(6);
  REQUIRE(c6.order() == 6);
  REQUIRE(is_biregular(c6) == std::pair<int, int>{2, 2});
  REQUIRE(diameter(c6) == 3);
  REQUIRE(girth(c6) == 6);
  REQUIRE(diameter(even_cycle(8)) == 4);
  REQUIRE_THROWS_AS(even_cycle(5), Error);
  REQUIRE_THROWS_AS(even_cycle(2), Error);
}

TEST_CASE("projective plane incidence graphs satisfy the plane axioms") {
  for (int q : {2, 3, 4, 5, 7}) {
    auto g = projective_plane(q);
    int n = q * q + q + 1;
    INFO("q=" << q);
    REQUIRE(g.n1() == n);
    REQUIRE(g.n2() == n);
    REQUIRE(is_biregular(g) == std::pair<int, int>{q + 1, q + 1});
    REQUIRE(diameter(g) == 3);
    REQUIRE(girth(g) == 6);
    // two distinct points lie on exactly one common line
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) REQUIRE(common_neighbors(g, a, b) == 1);
    // dually for lines
    auto t = g.transposed();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) REQUIRE(common_neighbors(t, a, b) == 1);
  }
  REQUIRE_THROWS_AS(projective_plane(6), Error);
}

TEST_CASE("symplectic quadrangles satisfy the quadrangle axiom") {
  for (int q : {2, 3, 4}) {
    auto g = symplectic_quadrangle(q);
    int n = (q + 1) * (q * q + 1);
    INFO("q=" << q);
    REQUIRE(g.n1() == n);
    REQUIRE(g.n2() == n);
    REQUIRE(is_biregular(g) == std::pair<int, int>{q + 1, q + 1});
    REQUIRE(diameter(g) == 4);
    REQUIRE(girth(g) == 8);
    // for a point P off a line L, exactly one point of L is collinear with P
    std::vector<std::set<int>> on_line(g.n2()), collinear(g.n1());
    for (int p = 0; p < g.n1(); ++p)
      for (int l : g.row_neighbors(p)) on_line[l].insert(p);
    for (int p = 0; p < g.n1(); ++p)
      for (int l : g.row_neighbors(p))
        for (int p2 : on_line[l])
          if (p2 != p) collinear[p].insert(p2);
    for (int p = 0; p < g.n1(); ++p)
      for (int l = 0; l < g.n2(); ++l) {
        if (g.edge(p, l)) continue;
        int hits = 0;
        for (int p2 : on_line[l]) hits += collinear[p].count(p2);
        REQUIRE(hits == 1);
      }
  }
  // W(2) is the Tutte-Coxeter graph
  REQUIRE(canonical_key(symplectic_quadrangle(2)) ==
          canonical_key(build_named("tutte-coxeter", {})));
}

TEST_CASE("g_6n degree pattern follows the residue of n mod 6") {
  // deltas over 3k for the six positions (0,0)..(0,5), by residue
  const int delta[6][6] = {{0, 0, 0, 0, 0, 0}, {1, 1, 0, 1, 0, 0},
                           {1, 2, 1, 1, 1, 0}, {1, 2, 2, 2, 1, 1},
                           {2, 2, 2, 3, 2, 1}, {2, 3, 2, 3, 3, 2}};
  for (int n = 6; n <= 40; ++n) {
    auto g = g_6n(n);
    int k = n / 6, rho = n % 6;
    INFO("n=" << n);
    REQUIRE(g.order() == n + 6);
    for (int j = 0; j < 6; ++j) REQUIRE(g.row_degree(j) == 3 * k + delta[rho][j]);
    for (int deg : g.column_degrees()) REQUIRE(deg == 3);
    REQUIRE(diameter(g) == 3);
    // columns 0 and 3 always share rows 0 and 3
    REQUIRE(girth(g) == 4);
  }
  auto g12 = g_6n(12);
  REQUIRE(is_biregular(g12) == std::pair<int, int>{6, 3});
  REQUIRE(g12.side_labels(1)[0] == "(0,0)");
  REQUIRE(g12.side_labels(2)[11] == "(1,11)");
  REQUIRE_THROWS_AS(g_6n(5), Error);
}

TEST_CASE("g_prime_r attains the odd Moore bound for r = 2 mod 3") {
  for (int r : {5, 8, 11, 14, 17}) {
    auto g = g_prime_r(r);
    INFO("r=" << r);
    REQUIRE(g.order() == 2 * r + 6);
    REQUIRE(is_biregular(g) == std::pair<int, int>{r, 3});
    REQUIRE(diameter(g) == 3);
    REQUIRE(girth(g) == 4);
    REQUIRE(defect(g, Params(r, 3, 3)) == 0);
  }
  // the edge swap moves one incidence from row 3 to row 5
  auto base = g_6n(10), patched = g_prime_r(5);
  REQUIRE(base.edge(3, 0));
  REQUIRE_FALSE(base.edge(5, 0));
  REQUIRE_FALSE(patched.edge(3, 0));
  REQUIRE(patched.edge(5, 0));
  REQUIRE_THROWS_AS(g_prime_r(4), Error);
  REQUIRE_THROWS_AS(g_prime_r(6), Error);
  REQUIRE_THROWS_AS(g_prime_r(7), Error);
  try {
    g_prime_r(6);
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::unsupported_residue);
  }
}

TEST_CASE("subdivision doubles diameter and girth") {
  struct Case {
    BipartiteGraph g;
    const char* name;
  };
  for (const auto& c :
       {Case{complete_bipartite(3, 3), "K33"}, Case{complete_bipartite(4, 4), "K44"},
        Case{even_cycle(6), "C6"}, Case{even_cycle(8), "C8"},
        Case{projective_plane(2), "heawood"}, Case{projective_plane(3), "PG(2,3)"},
        Case{symplectic_quadrangle(2), "tutte-coxeter"}}) {
    auto s = subdivision(c.g);
    INFO(c.name);
    REQUIRE(s.order() == c.g.order() + c.g.edge_count());
    REQUIRE(*diameter(s) == 2 * *diameter(c.g));
    REQUIRE(*girth(s) == 2 * *girth(c.g));
    auto bireg = is_biregular(c.g);
    REQUIRE(matches_degrees(s, bireg->first, 2));
  }
  REQUIRE_THROWS_AS(subdivision(complete_bipartite(3, 4)), Error);  // not regular
  REQUIRE_THROWS_AS(subdivision(complete_bipartite(1, 1)), Error);  // degree 1
  auto disconnected =
      BipartiteGraph::from_edges(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1},
                                        {1, 0}, {2, 3}, {3, 2}});
  REQUIRE_THROWS_AS(subdivision(disconnected), Error);
}

TEST_CASE("subdivided complete bipartite graphs are extremal at diameter 4") {
  for (int r = 3; r <= 10; ++r) {
    auto s = subdivision(complete_bipartite(r, r));
    INFO("r=" << r);
    REQUIRE(s.order() == r * r + 2 * r);
    REQUIRE(matches_degrees(s, r, 2));
    REQUIRE(diameter(s) == 4);
    REQUIRE(defect(s, Params(r, 2, 4)) == 0);
  }
}

TEST_CASE("semi-double and k-tuple preserve diameter") {
  auto heawood = projective_plane(2);
  auto sd = semi_double(heawood, 1);
  REQUIRE(sd.order() == 21);
  REQUIRE(matches_degrees(sd, 6, 3));
  REQUIRE(diameter(sd) == 3);
  REQUIRE(defect(sd, Params(6, 3, 3)) == 0);

  auto tc = symplectic_quadrangle(2);
  auto sdt = semi_double(tc, 1);
  REQUIRE(sdt.order() == 45);
  REQUIRE(matches_degrees(sdt, 6, 3));
  REQUIRE(diameter(sdt) == 4);
  REQUIRE(defect(sdt, Params(6, 3, 4)) == 54);

  auto c6 = even_cycle(6);
  auto sdc = semi_double(c6, 1);
  REQUIRE(sdc.order() == 9);
  REQUIRE(matches_degrees(sdc, 4, 2));
  REQUIRE(defect(sdc, Params(4, 2, 3)) == 0);

  for (int k : {2, 3, 5}) {
    auto kt = k_tuple(c6, 1, k);
    INFO("k=" << k);
    REQUIRE(kt.order() == 3 * k + 3);
    REQUIRE(matches_degrees(kt, 2 * k, 2));
    REQUIRE(diameter(kt) == 3);
    REQUIRE(defect(kt, Params(2 * k, 2, 3)) == 0);
  }
  REQUIRE(canonical_key(k_tuple(c6, 1, 2)) == canonical_key(semi_double(c6, 1)));

  // clones copy the original neighborhoods verbatim
  auto kt = k_tuple(heawood, 1, 3);
  for (int c = 1; c < 3; ++c)
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        REQUIRE(kt.edge(c * 7 + i, j) == kt.edge(i, j));
  REQUIRE(kt.side_labels(1)[7] == kt.side_labels(1)[0] + "_1");

  // doubling side 2 is doubling side 1 of the transpose
  auto sd2 = semi_double(heawood, 2);
  REQUIRE(canonical_key(sd2) == canonical_key(semi_double(heawood.transposed(), 1)));

  REQUIRE_THROWS_AS(k_tuple(c6, 1, 1), Error);
  REQUIRE_THROWS_AS(k_tuple(c6, 3, 2), Error);
  REQUIRE_THROWS_AS(k_tuple(complete_bipartite(1, 1), 1, 2), Error);  // diameter 1
}

TEST_CASE("the [r,2r;d] family") {
  // d = 3: semi-double of a projective plane, order 3(q^2+q+1) with q = r-1
  for (int r : {3, 4, 5}) {
    auto g = family_r_2r(r, 3);
    int q = r - 1;
    INFO("r=" << r);
    REQUIRE(g.order() == 3 * (q * q + q + 1));
    REQUIRE(matches_degrees(g, 2 * r, r));
    REQUIRE(diameter(g) == 3);
  }
  REQUIRE(canonical_key(family_r_2r(3, 3)) ==
          canonical_key(semi_double(projective_plane(2), 1)));
  REQUIRE(defect(family_r_2r(3, 3), Params(6, 3, 3)) == 0);

  // d = 4: semi-double of a symplectic quadrangle
  auto g34 = family_r_2r(3, 4);
  REQUIRE(g34.order() == 45);
  REQUIRE(defect(g34, Params(6, 3, 4)) == 54);
  auto g44 = family_r_2r(4, 4);
  REQUIRE(g44.order() == 3 * 4 * 10);
  REQUIRE(matches_degrees(g44, 8, 4));
  REQUIRE(diameter(g44) == 4);

  REQUIRE_THROWS_AS(family_r_2r(7, 3), Error);  // 6 is not a prime power
  REQUIRE_THROWS_AS(family_r_2r(3, 6), Error);  // needs an external hexagon
  try {
    family_r_2r(3, 6);
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::needs_input);
  }
}

TEST_CASE("the [r,2;2m] bimoore family") {
  struct Row {
    int r;
    long long order;
  };
  for (auto row : {Row{3, 35}, Row{4, 78}, Row{5, 147}, Row{6, 248}, Row{8, 570},
                   Row{9, 803}, Row{10, 1092}}) {
    auto g = moore_r2(row.r, 3);
    INFO("r=" << row.r);
    REQUIRE(g.order() == row.order);
    REQUIRE(matches_degrees(g, row.r, 2));
    REQUIRE(diameter(g) == 6);
    REQUIRE(defect(g, Params(row.r, 2, 6)) == 0);
  }
  REQUIRE(canonical_key(moore_r2(3, 3)) ==
          canonical_key(subdivision(projective_plane(2))));

  auto g34 = moore_r2(3, 4);
  REQUIRE(g34.order() == 75);
  REQUIRE(diameter(g34) == 8);
  REQUIRE(defect(g34, Params(3, 2, 8)) == 0);
  REQUIRE(canonical_key(g34) ==
          canonical_key(subdivision(symplectic_quadrangle(2))));

  REQUIRE_THROWS_AS(moore_r2(7, 3), Error);
  REQUIRE_THROWS_AS(moore_r2(3, 6), Error);  // needs an external hexagon
}

TEST_CASE("external Moore-graph validation") {
  REQUIRE_NOTHROW(require_moore_bipartite(projective_plane(2), 3, 3));
  REQUIRE_NOTHROW(require_moore_bipartite(symplectic_quadrangle(2), 3, 4));
  REQUIRE_THROWS_AS(require_moore_bipartite(projective_plane(2), 4, 3), Error);
  REQUIRE_THROWS_AS(require_moore_bipartite(even_cycle(6), 3, 3), Error);
  REQUIRE_THROWS_AS(require_moore_bipartite(complete_bipartite(3, 3), 3, 3), Error);
}

TEST_CASE("named builders meet their own expectations") {
  struct Case {
    const char* name;
    std::vector<int> params;
  };
  for (const auto& c : {Case{"projective-plane", {2}}, Case{"projective-plane", {3}},
                        Case{"symplectic-quadrangle", {2}},
                        Case{"symplectic-quadrangle", {3}}, Case{"g6n", {12}},
                        Case{"g6n", {14}}, Case{"g6n", {16}}, Case{"g-prime", {5}},
                        Case{"g-prime", {8}}, Case{"heawood", {}}, Case{"fano", {}},
                        Case{"tutte-coxeter", {}}, Case{"k33", {}}, Case{"k44", {}},
                        Case{"c6", {}}, Case{"cycle", {8}},
                        Case{"complete-bipartite", {3, 3}},
                        Case{"family-r-2r", {3, 3}}, Case{"moore-r2", {3, 3}}}) {
    INFO(c.name);
    auto g = build_named(c.name, c.params);
    auto e = expected_for(c.name, c.params);
    REQUIRE(e.has_value());
    auto bad = check_expected(g, *e);
    for (const auto& b : bad) INFO(b);
    REQUIRE(bad.empty());
  }
  REQUIRE_THROWS_AS(build_named("petersen", {}), Error);
  REQUIRE_THROWS_AS(build_named("g6n", {}), Error);  // missing parameter
}
