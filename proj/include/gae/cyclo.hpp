#pragma once

#include "gae/quadexp.hpp"

#include <optional>

namespace gae {

// Integer combinations of formal powers i^E with E a QuadExp; exponent
// constants are kept in [0,2) with i^2 = -1 folded into coefficients,
// which makes the ring an integral domain and equality structural.
class Cyclo {
public:
  using Terms = std::map<QuadExp, Int>;

  Cyclo() = default;
  explicit Cyclo(Int c) {
    if (c != 0) add_term(QuadExp(), std::move(c));
  }
  static Cyclo i_pow(const QuadExp& e, Int c = 1) {
    Cyclo r;
    r.add_term(e, std::move(c));
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_zero() &&
           terms_.begin()->second == 1;
  }
  size_t size() const { return terms_.size(); }

  void add_term(const QuadExp& e, const Int& c) {
    if (c == 0) return;
    auto [key, sign] = e.norm_key();
    auto it = terms_.find(key);
    Int v = (it == terms_.end() ? Int(0) : it->second) + (sign > 0 ? c : -c);
    if (v == 0) {
      if (it != terms_.end()) terms_.erase(it);
    } else {
      terms_[key] = std::move(v);
    }
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    Cyclo r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  Cyclo operator-() const {
    Cyclo r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    Cyclo r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  bool operator==(const Cyclo& o) const { return terms_ == o.terms_; }

  Cyclo shift(const QuadExp& e) const {
    Cyclo r;
    for (const auto& [ee, c] : terms_) r.add_term(ee + e, c);
    return r;
  }

  Int int_content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
      g = int_gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  const std::pair<const QuadExp, Int>& lead() const {
    if (terms_.empty()) throw std::logic_error("cyclo: lead of zero");
    return *terms_.rbegin();
  }
  const std::pair<const QuadExp, Int>& least() const {
    if (terms_.empty()) throw std::logic_error("cyclo: least of zero");
    return *terms_.begin();
  }

  // exact division in the group algebra; bounded search, nullopt on failure
  static std::optional<Cyclo> exact_div(Cyclo a, const Cyclo& b,
                                        size_t max_steps = 4096) {
    if (b.is_zero()) throw std::logic_error("cyclo: divide by zero");
    Cyclo q;
    QuadExp lbe = b.lead().first;
    Int lbc = b.lead().second;
    size_t guard = 0;
    while (!a.is_zero()) {
      if (++guard > max_steps) return std::nullopt;
      QuadExp lae = a.lead().first;
      Int lac = a.lead().second;
      if (lac % lbc != 0) return std::nullopt;
      Cyclo t = Cyclo::i_pow(lae - lbe, lac / lbc);
      q += t;
      a -= t * b;
      if (!a.is_zero() && !(a.lead().first < lae)) return std::nullopt;
    }
    return q;
  }

private:
  Terms terms_;
};

// Formal fraction over Cyclo. Reduction collapses exact divisions and
// normalizes the denominator by a monomial shift and overall sign; equality
// goes through cross-multiplication (the ring is a domain).
class CycloFrac {
public:
  CycloFrac() : num_(), den_(Int(1)) {}
  CycloFrac(Cyclo n) : num_(std::move(n)), den_(Int(1)) {}
  explicit CycloFrac(Int c) : num_(std::move(c)), den_(Int(1)) {}
  CycloFrac(Cyclo n, Cyclo d) { assign(std::move(n), std::move(d)); }

  const Cyclo& num() const { return num_; }
  const Cyclo& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend CycloFrac operator+(const CycloFrac& a, const CycloFrac& b) {
    return CycloFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend CycloFrac operator-(const CycloFrac& a, const CycloFrac& b) {
    return CycloFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend CycloFrac operator*(const CycloFrac& a, const CycloFrac& b) {
    return CycloFrac(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend CycloFrac operator/(const CycloFrac& a, const CycloFrac& b) {
    if (b.is_zero()) throw std::domain_error("cyclo: division by zero");
    return CycloFrac(a.num_ * b.den_, a.den_ * b.num_);
  }
  CycloFrac operator-() const {
    CycloFrac r = *this;
    r.num_ = -r.num_;
    return r;
  }
  CycloFrac& operator+=(const CycloFrac& o) { return *this = *this + o; }
  CycloFrac& operator-=(const CycloFrac& o) { return *this = *this - o; }
  CycloFrac& operator*=(const CycloFrac& o) { return *this = *this * o; }
  CycloFrac& operator/=(const CycloFrac& o) { return *this = *this / o; }

  CycloFrac pow(long long k) const {
    if (k < 0) return CycloFrac(Cyclo(Int(1))) / pow(-k);
    CycloFrac r(Cyclo(Int(1)));
    for (long long i = 0; i < k; ++i) r *= *this;
    return r;
  }

  bool operator==(const CycloFrac& o) const {
    return num_ * o.den_ == o.num_ * den_;
  }

private:
  void assign(Cyclo n, Cyclo d) {
    if (d.is_zero()) throw std::domain_error("cyclo: zero denominator");
    if (n.is_zero()) {
      num_ = Cyclo();
      den_ = Cyclo(Int(1));
      return;
    }
    if (auto q = Cyclo::exact_div(n, d)) {
      num_ = std::move(*q);
      den_ = Cyclo(Int(1));
      return;
    }
    Int g = int_gcd(n.int_content(), d.int_content());
    if (g > 1) {
      Cyclo n2, d2;
      for (const auto& [e, c] : n.terms()) n2.add_term(e, c / g);
      for (const auto& [e, c] : d.terms()) d2.add_term(e, c / g);
      n = std::move(n2);
      d = std::move(d2);
    }
    QuadExp shift = -d.least().first;
    n = n.shift(shift);
    d = d.shift(shift);
    if (d.least().second < 0) {
      n = -n;
      d = -d;
    }
    num_ = std::move(n);
    den_ = std::move(d);
  }

  Cyclo num_, den_;
};

} // namespace gae
