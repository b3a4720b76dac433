#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bimoore/errors.hpp"

namespace bimoore {

// Arithmetic tables for the tiny finite fields the incidence-geometry
// builders need: GF(q) for q in {2,3,4,5,7,8,9}. Prime-power fields use a
// fixed conventional irreducible modulus; elements are indices 0..q-1 whose
// base-p digits are the polynomial coefficients (constant term first).
class GaloisField {
 public:
  static const GaloisField& get(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaloisField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) {
      bool ok = q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9;
      if (!ok)
        throw Error(Errc::unsupported_order,
                    "no field tables for q=" + std::to_string(q));
      it = cache.emplace(q, std::unique_ptr<GaloisField>(new GaloisField(q))).first;
    }
    return *it->second;
  }

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int sub(int a, int b) const { return add_[index(a, neg_[check(b)])]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const { return neg_[check(a)]; }

  int inv(int a) const {
    check(a);
    if (a == 0) throw Error(Errc::bad_input, "zero has no multiplicative inverse");
    return inv_[a];
  }

 private:
  explicit GaloisField(int q) : q_(q) {
    p_ = 2;
    while (q % p_ != 0) ++p_;
    e_ = 0;
    for (int t = q; t > 1; t /= p_) ++e_;
    if (e_ > 1) {
      // conventional minimal irreducibles, constant term first, monic
      static const std::map<int, std::vector<int>> moduli = {
          {4, {1, 1, 1}},     // x^2 + x + 1
          {8, {1, 1, 0, 1}},  // x^3 + x + 1
          {9, {1, 0, 1}},     // x^2 + 1
      };
      modulus_ = moduli.at(q);
    }
    add_.resize(static_cast<std::size_t>(q) * q);
    mul_.resize(static_cast<std::size_t>(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[static_cast<std::size_t>(a) * q + b] = add_slow(a, b);
        mul_[static_cast<std::size_t>(a) * q + b] = mul_slow(a, b);
      }
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b)
        if (add_[static_cast<std::size_t>(a) * q + b] == 0) neg_[a] = b;
      for (int b = 1; b < q; ++b)
        if (mul_[static_cast<std::size_t>(a) * q + b] == 1) inv_[a] = b;
    }
  }

  int check(int a) const {
    if (a < 0 || a >= q_)
      throw Error(Errc::bad_input, "field element out of range");
    return a;
  }

  std::size_t index(int a, int b) const {
    check(a);
    check(b);
    return static_cast<std::size_t>(a) * q_ + b;
  }

  std::vector<int> digits(int a) const {
    std::vector<int> out(e_);
    for (int i = 0; i < e_; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  }

  int undigits(const std::vector<int>& d) const {
    int out = 0;
    for (int i = e_ - 1; i >= 0; --i) out = out * p_ + d[i];
    return out;
  }

  int add_slow(int a, int b) const {
    if (e_ == 1) return (a + b) % p_;
    std::vector<int> da = digits(a), db = digits(b);
    for (int i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da);
  }

  int mul_slow(int a, int b) const {
    if (e_ == 1) return (a * b) % p_;
    std::vector<int> da = digits(a), db = digits(b);
    std::vector<int> c(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j) c[i + j] = (c[i + j] + da[i] * db[j]) % p_;
    // fold x^k for k >= e using the monic modulus: x^e = -sum modulus_[j] x^j
    for (int i = 2 * e_ - 2; i >= e_; --i) {
      int v = c[i];
      if (v == 0) continue;
      c[i] = 0;
      for (int j = 0; j < e_; ++j)
        c[i - e_ + j] = ((c[i - e_ + j] - v * modulus_[j]) % p_ + p_) % p_;
    }
    c.resize(e_);
    return undigits(c);
  }

  int q_, p_, e_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace bimoore
