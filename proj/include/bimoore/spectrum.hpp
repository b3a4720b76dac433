#pragma once

#include <optional>
#include <vector>

#include "bimoore/bipartite_graph.hpp"
#include "bimoore/constructions.hpp"
#include "bimoore/errors.hpp"
#include "bimoore/metrics.hpp"
#include "bimoore/polynomial.hpp"

namespace bimoore {

/// Exact characteristic polynomial of the full adjacency matrix via the
/// Samuelson-Berkowitz recurrence (division-free; the diagonal is zero, so
/// the a_kk term drops out):
///   p_k(x) = x * p_{k-1}(x) - sum_i (R A_{k-1}^i S) * trunc_i(p_{k-1})
/// where R/S are the border row/column of the k-th leading principal minor
/// and trunc_i keeps the top k-1-i coefficients.
inline IntPolynomial char_poly(const BipartiteGraph& g) {
  int n = g.order();
  if (n > 256)
    throw Error(Errc::too_large,
                "characteristic polynomial is capped at 256 vertices");
  if (n == 0) return IntPolynomial(std::vector<Int>{1});
  std::vector<std::vector<int>> adj = detail::adjacency(g);

  // p holds coefficients highest power first; p[j] multiplies x^{k-j}.
  std::vector<Int> p{1};
  std::vector<Int> v, nv, np;
  for (int k = 1; k <= n; ++k) {
    int mm = k - 1;
    np.assign(k + 1, 0);
    for (int j = 0; j < k; ++j) np[j] = p[j];  // x * p_{k-1}

    if (mm > 0) {
      // moments m_i = R * A^i * S against the leading mm x mm block; the
      // matrix is symmetric so S is R transposed.
      v.assign(mm, 0);
      for (int c : adj[mm])
        if (c < mm) v[c] = 1;
      for (int i = 0; i <= mm - 1; ++i) {
        Int moment = 0;
        for (int c : adj[mm])
          if (c < mm) moment += v[c];
        if (moment != 0)
          for (int l = 0; l <= k - 2 - i; ++l) np[2 + i + l] -= moment * p[l];
        if (i + 1 <= mm - 1) {
          nv.assign(mm, 0);
          for (int row = 0; row < mm; ++row) {
            Int acc = 0;
            for (int c : adj[row])
              if (c < mm) acc += v[c];
            nv[row] = std::move(acc);
          }
          v.swap(nv);
        }
      }
    }
    p = std::move(np);
  }
  // reverse into lowest-power-first order
  std::vector<Int> coeffs(p.rbegin(), p.rend());
  return IntPolynomial(std::move(coeffs));
}

struct IdentityCheck {
  bool holds = false;
  std::optional<int> first_mismatch_power;
  IntPolynomial lhs, rhs;
};

namespace detail {

inline IdentityCheck compare_polys(IntPolynomial lhs, IntPolynomial rhs) {
  IdentityCheck out;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  out.holds = out.lhs == out.rhs;
  if (!out.holds) {
    int top = std::max(out.lhs.degree(), out.rhs.degree());
    for (int i = 0; i <= top; ++i)
      if (out.lhs.at(i) != out.rhs.at(i)) {
        out.first_mismatch_power = i;
        break;
      }
  }
  return out;
}

}  // namespace detail

/// Verifies phi_{S(G)}(x) = x^{m-n} * phi_G(x^2 - r) for an r-regular G
/// with n vertices and m edges, comparing exact polynomials on both sides.
inline IdentityCheck check_subdivision_identity(const BipartiteGraph& g, int r) {
  auto bireg = is_biregular(g);
  if (!bireg || bireg->first != r || bireg->second != r)
    throw Error(Errc::not_regular,
                "subdivision identity needs an r-regular input graph");
  BipartiteGraph s = subdivision(g);
  IntPolynomial lhs = char_poly(s);
  int n = g.order();
  int m = static_cast<int>(g.edge_count());
  IntPolynomial rhs = shift_up(compose_x2_minus(char_poly(g), r), m - n);
  return detail::compare_polys(std::move(lhs), std::move(rhs));
}

/// Verifies phi_{G^{kV}}(x) = x^{(k-1)*n_side} * sum_j a_j k^{(n-j)/2} x^j
/// where phi_G = sum_j a_j x^j. Bipartite spectra are symmetric, so a_j
/// vanishes whenever n - j is odd; if not, the input is rejected.
inline IdentityCheck check_ktuple_identity(const BipartiteGraph& g, int side, int k) {
  if (k < 2)
    throw Error(Errc::bad_multiplicity, "k_tuple identity needs k >= 2");
  if (side != 1 && side != 2)
    throw Error(Errc::bad_input, "side must be 1 or 2");
  IntPolynomial base = char_poly(g);
  int n = g.order();
  for (int j = 0; j <= base.degree(); ++j)
    if ((n - j) % 2 != 0 && base.at(j) != 0)
      throw Error(Errc::bad_spectral_symmetry,
                  "characteristic polynomial has a nonzero coefficient at "
                  "power " +
                      std::to_string(j) + " of parity opposite to n");
  std::vector<Int> scaled(base.degree() + 1, 0);
  for (int j = 0; j <= base.degree(); ++j) {
    if (base.at(j) == 0) continue;
    Int factor = 1;
    for (int e = 0; e < (n - j) / 2; ++e) factor *= k;
    scaled[j] = base.at(j) * factor;
  }
  int n_side = side == 1 ? g.n1() : g.n2();
  IntPolynomial rhs = shift_up(IntPolynomial(std::move(scaled)), (k - 1) * n_side);
  IntPolynomial lhs = char_poly(k_tuple(g, side, k));
  return detail::compare_polys(std::move(lhs), std::move(rhs));
}

}  // namespace bimoore
