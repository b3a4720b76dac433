#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bimoore/errors.hpp"

namespace bimoore {

using Int = boost::multiprecision::cpp_int;

// Dense exact-integer polynomial; coeffs[i] multiplies x^i. The zero
// polynomial has an empty coefficient vector.
struct IntPolynomial {
  std::vector<Int> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Int at(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[i];
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }
};

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.at(static_cast<int>(i)) + b.at(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.at(static_cast<int>(i)) - b.at(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return IntPolynomial(std::move(c));
}

inline IntPolynomial operator*(const Int& k, const IntPolynomial& p) {
  if (k == 0) return {};
  std::vector<Int> c = p.coeffs;
  for (Int& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

/// p(x) * x^k.
inline IntPolynomial shift_up(const IntPolynomial& p, int k) {
  if (p.is_zero()) return {};
  std::vector<Int> c(p.coeffs.size() + k, 0);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i + k] = p.coeffs[i];
  return IntPolynomial(std::move(c));
}

/// p(x^2 - r), by Horner evaluation in the polynomial ring.
inline IntPolynomial compose_x2_minus(const IntPolynomial& p, int r) {
  IntPolynomial y(std::vector<Int>{-r, 0, 1});
  IntPolynomial acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * y;
    acc = acc + IntPolynomial(std::vector<Int>{p.at(i)});
  }
  return acc;
}

/// Exact division: returns p / d when the remainder is zero, nullopt
/// otherwise. d must be monic.
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& p,
                                                 const IntPolynomial& d) {
  if (d.is_zero() || d.coeffs.back() != 1)
    throw Error(Errc::bad_input, "divide_exact needs a monic divisor");
  if (p.is_zero()) return IntPolynomial{};
  if (p.degree() < d.degree()) return std::nullopt;
  std::vector<Int> rem = p.coeffs;
  std::vector<Int> quot(p.degree() - d.degree() + 1, 0);
  for (int i = p.degree() - d.degree(); i >= 0; --i) {
    Int c = rem[i + d.degree()];
    quot[i] = c;
    if (c == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= c * d.coeffs[j];
  }
  for (const Int& c : rem)
    if (c != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

namespace detail {

inline void append_term(std::ostringstream& os, const Int& c, int power, bool first) {
  if (c == 0) return;
  Int a = c;
  if (first) {
    if (a < 0) {
      os << '-';
      a = -a;
    }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  if (power == 0) {
    os << a;
    return;
  }
  if (a != 1) os << a;
  os << 'x';
  if (power > 1) os << '^' << power;
}

}  // namespace detail

/// Human form, highest power first: "x^6 - 6x^4 + 9x^2 - 4".
inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.at(i) == 0) continue;
    detail::append_term(os, p.at(i), i, first);
    first = false;
  }
  return os.str();
}

/// Coefficient list, lowest power first: "[-4, 0, 9, 0, -6, 0, 1]".
inline std::string coeff_list_string(const IntPolynomial& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) os << ", ";
    os << p.at(i);
  }
  os << ']';
  return os.str();
}

/// Factored display by trial division: powers of x, integer roots, then
/// x^2 - a factors; whatever remains is printed unfactored. Root candidates
/// are bounded divisors of the constant term, which covers adjacency
/// spectra of the graphs in scope.
inline std::string factored_string(const IntPolynomial& input) {
  if (input.is_zero()) return "0";
  IntPolynomial p = input;
  std::ostringstream os;

  int zeros = 0;
  while (p.at(0) == 0 && p.degree() >= 1) {
    auto q = divide_exact(p, IntPolynomial(std::vector<Int>{0, 1}));
    p = *q;
    ++zeros;
  }

  std::vector<std::pair<std::string, int>> factors;
  constexpr int kRootLimit = 4096;
  for (int a = 1; a <= kRootLimit; ++a) {
    for (int sign : {1, -1}) {
      int root = sign * a;
      int mult = 0;
      while (p.degree() >= 1 && p.at(0) % root == 0) {
        auto q = divide_exact(p, IntPolynomial(std::vector<Int>{-root, 1}));
        if (!q) break;
        p = *q;
        ++mult;
      }
      if (mult > 0)
        factors.push_back({root > 0 ? "(x-" + std::to_string(root) + ")"
                                    : "(x+" + std::to_string(-root) + ")",
                           mult});
    }
    if (p.degree() < 1) break;
  }
  for (int a = 2; a <= kRootLimit && p.degree() >= 2; ++a) {
    int mult = 0;
    while (p.degree() >= 2 && p.at(0) % a == 0) {
      auto q = divide_exact(p, IntPolynomial(std::vector<Int>{-a, 0, 1}));
      if (!q) break;
      p = *q;
      ++mult;
    }
    if (mult > 0) factors.push_back({"(x^2-" + std::to_string(a) + ")", mult});
  }

  bool printed = false;
  if (zeros > 0) {
    os << 'x';
    if (zeros > 1) os << '^' << zeros;
    printed = true;
  }
  for (const auto& [name, mult] : factors) {
    os << name;
    if (mult > 1) os << '^' << mult;
    printed = true;
  }
  if (p.degree() >= 1) {
    os << '(' << to_string(p) << ')';
    printed = true;
  } else if (p.at(0) != 1 || !printed) {
    std::ostringstream head;
    head << p.at(0);
    return printed ? head.str() + os.str() : head.str();
  }
  return os.str();
}

}  // namespace bimoore
