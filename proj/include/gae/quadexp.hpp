#pragma once

#include "gae/ints.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gae {

// Polynomial of degree <= 2 in weight symbols with coefficients in (1/4)Z.
// Keys: (-1,-1) constant, (-1,j) linear in symbol j, (i,j) with i<=j
// quadratic. Coefficients are stored in quarter units.
class QuadExp {
public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, long long>;

  QuadExp() = default;
  static QuadExp constant_q(long long quarters) {
    QuadExp e;
    e.set(Key{-1, -1}, quarters);
    return e;
  }
  static QuadExp constant(long long n) { return constant_q(4 * n); }
  static QuadExp sym(int id, long long quarters = 4) {
    QuadExp e;
    e.set(Key{-1, id}, quarters);
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Key{-1, -1});
  }
  long long constant_quarters() const {
    auto it = terms_.find(Key{-1, -1});
    return it == terms_.end() ? 0 : it->second;
  }
  bool is_integer_constant() const {
    return is_constant() && constant_quarters() % 4 == 0;
  }
  bool degree_le1() const {
    for (const auto& [k, c] : terms_)
      if (k.first != -1) return false;
    return true;
  }

  void set(const Key& k, long long quarters) {
    if (quarters == 0)
      terms_.erase(k);
    else
      terms_[k] = quarters;
  }
  void add(const Key& k, long long quarters) {
    auto it = terms_.find(k);
    long long v = (it == terms_.end() ? 0 : it->second) + quarters;
    set(k, v);
  }

  friend QuadExp operator+(const QuadExp& a, const QuadExp& b) {
    QuadExp r = a;
    for (const auto& [k, c] : b.terms_) r.add(k, c);
    return r;
  }
  friend QuadExp operator-(const QuadExp& a, const QuadExp& b) {
    QuadExp r = a;
    for (const auto& [k, c] : b.terms_) r.add(k, -c);
    return r;
  }
  QuadExp operator-() const {
    QuadExp r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }

  // scale by integer n / d; throws if a coefficient leaves (1/4)Z
  QuadExp scaled(long long n, long long d = 1) const {
    QuadExp r;
    for (const auto& [k, c] : terms_) {
      long long v = c * n;
      if (v % d != 0) throw std::domain_error("quadexp: scaling leaves (1/4)Z");
      r.set(k, v / d);
    }
    return r;
  }

  // product of two forms of degree <= 1; result has degree <= 2
  friend QuadExp mul_affine(const QuadExp& a, const QuadExp& b) {
    QuadExp r;
    for (const auto& [ka, ca] : a.terms_) {
      if (ka.first != -1) throw std::domain_error("quadexp: mul of degree > 1");
      for (const auto& [kb, cb] : b.terms_) {
        if (kb.first != -1) throw std::domain_error("quadexp: mul of degree > 1");
        long long prod = ca * cb;
        if (prod % 4 != 0)
          throw std::domain_error("quadexp: product leaves (1/4)Z");
        Key k;
        if (ka.second == -1 && kb.second == -1)
          k = {-1, -1};
        else if (ka.second == -1)
          k = {-1, kb.second};
        else if (kb.second == -1)
          k = {-1, ka.second};
        else
          k = {std::min(ka.second, kb.second), std::max(ka.second, kb.second)};
        r.add(k, prod / 4);
      }
    }
    return r;
  }

  bool operator==(const QuadExp& o) const { return terms_ == o.terms_; }
  std::strong_ordering operator<=>(const QuadExp& o) const {
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
      if (i->first != j->first) return i->first <=> j->first;
      if (i->second != j->second) return i->second <=> j->second;
      ++i;
      ++j;
    }
    if (i != terms_.end()) return std::strong_ordering::greater;
    if (j != o.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  // normal form as an exponent of i (i^4 = 1, i^2 = -1): constant shifted
  // into [0,2); c = m + 2k gives i^c = (-1)^k i^m
  std::pair<QuadExp, int> norm_key() const {
    QuadExp r = *this;
    long long c = r.constant_quarters();
    long long m = ((c % 8) + 8) % 8;
    long long k = (c - m) / 8;
    r.set(Key{-1, -1}, m);
    return {r, k % 2 == 0 ? 1 : -1};
  }

private:
  Terms terms_;
};

} // namespace gae
