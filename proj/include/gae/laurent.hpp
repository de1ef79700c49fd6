#pragma once

#include "gae/monomial.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace gae {

// Z[M]: Laurent polynomials with arbitrary-precision integer coefficients.
// Sparse map Monomial -> nonzero coefficient; map order is the canonical
// term order (lexicographic on exponent vectors).
class Laurent {
public:
  using Terms = std::map<Monomial, Int>;

  Laurent() = default;
  explicit Laurent(Int c) {
    if (c != 0) terms_[Monomial()] = std::move(c);
  }
  Laurent(Int c, const Monomial& m) {
    if (c != 0) terms_[m] = std::move(c);
  }
  static Laurent var(int id, long long exp = 1, Int c = 1) {
    return Laurent(std::move(c), Monomial::var(id, exp));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() &&
           terms_.begin()->second == 1;
  }
  size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  Laurent shift(const Monomial& m) const {
    Laurent r;
    for (const auto& [mm, c] : terms_) r.terms_[mm * m] = c;
    return r;
  }

  // componentwise-min monomial over all terms; shifting by its inverse gives
  // a true polynomial with per-variable minimum exponent 0
  Monomial min_monomial_shift() const {
    Monomial m;
    bool first = true;
    for (const auto& [mm, c] : terms_) {
      m = first ? mm : Monomial::exponent_min(m, mm);
      first = false;
    }
    return m;
  }

  Int int_content() const {
    Int g = 0;
    for (const auto& [m, c] : terms_) {
      g = int_gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  Laurent divide_int(const Int& d) const {
    Laurent r;
    for (const auto& [m, c] : terms_) {
      if (c % d != 0) throw std::logic_error("laurent: inexact integer division");
      r.terms_[m] = c / d;
    }
    return r;
  }

  const std::pair<const Monomial, Int>& lead() const {
    if (terms_.empty()) throw std::logic_error("laurent: lead of zero");
    return *terms_.rbegin();
  }

  // exact multivariate division; nullopt if not divisible.
  // max_steps > 0 bounds the quotient size for speculative divisions.
  static std::optional<Laurent> exact_div(Laurent a, const Laurent& b,
                                          size_t max_steps = 0) {
    if (b.is_zero()) throw std::logic_error("laurent: divide by zero");
    Laurent q;
    const Monomial lbm = b.lead().first;
    const Int lbc = b.lead().second;
    size_t guard = 0;
    while (!a.is_zero()) {
      if (max_steps && ++guard > max_steps) return std::nullopt;
      Monomial lam = a.lead().first;
      Int lac = a.lead().second;
      if (lac % lbc != 0) return std::nullopt;
      Monomial qm = lam * lbm.inverse();
      Laurent t(lac / lbc, qm);
      q += t;
      a -= t * b;
      if (!a.is_zero() && !(a.lead().first < lam)) return std::nullopt;
    }
    return q;
  }

private:
  Terms terms_;
};

} // namespace gae
