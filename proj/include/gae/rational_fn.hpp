#pragma once

#include "gae/laurent.hpp"

#include <set>

namespace gae {
namespace detail {

inline std::set<int> vars_of(const Laurent& p) {
  std::set<int> s;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.entries()) s.insert(v);
  return s;
}

inline long long degree_in(const Laurent& p, int x) {
  long long d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(x));
  return d;
}

// coefficient of x^k, as a polynomial in the remaining variables
inline Laurent coeff_of(const Laurent& p, int x, long long k) {
  Laurent r;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(x) != k) continue;
    r.add_term(m * Monomial::var(x, -k), c);
  }
  return r;
}

Laurent poly_gcd(const Laurent& a, const Laurent& b);

// gcd of all x-coefficients
inline Laurent content_in(const Laurent& p, int x) {
  Laurent g;
  for (long long k = 0; k <= degree_in(p, x); ++k) {
    Laurent c = coeff_of(p, x, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// pseudo-remainder of a by b in variable x
inline Laurent prem(Laurent a, const Laurent& b, int x) {
  long long db = degree_in(b, x);
  Laurent lcb = coeff_of(b, x, db);
  while (!a.is_zero()) {
    long long da = degree_in(a, x);
    if (da < db) break;
    Laurent lca = coeff_of(a, x, da);
    a = a * lcb - b * lca.shift(Monomial::var(x, da - db));
  }
  return a;
}

inline Int sign_of_lead(const Laurent& p) {
  return p.is_zero() ? Int(0) : (p.lead().second > 0 ? Int(1) : Int(-1));
}

// gcd of true polynomials (all exponents >= 0), primitive and positive-lead
inline Laurent poly_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent(Int(1));
  if (a.is_zero() || b.is_zero()) {
    Laurent r = a.is_zero() ? b : a;
    Int c = r.int_content();
    r = r.divide_int(c * sign_of_lead(r));
    return r;
  }
  std::set<int> vs = vars_of(a);
  for (int v : vars_of(b)) vs.insert(v);
  if (vs.empty()) return Laurent(int_gcd(a.terms().begin()->second,
                                         b.terms().begin()->second));
  int x = *vs.rbegin();

  Int ica = a.int_content(), icb = b.int_content();
  Laurent pa = a.divide_int(ica), pb = b.divide_int(icb);
  Laurent ca = content_in(pa, x), cb = content_in(pb, x);
  Laurent f = Laurent::exact_div(pa, ca).value();
  Laurent g = Laurent::exact_div(pb, cb).value();
  Laurent cont = poly_gcd(ca, cb) * Laurent(int_gcd(ica, icb));

  if (degree_in(f, x) < degree_in(g, x)) std::swap(f, g);
  while (!g.is_zero()) {
    Laurent r = prem(f, g, x);
    f = g;
    if (r.is_zero()) {
      g = Laurent();
    } else {
      Int ic = r.int_content();
      r = r.divide_int(ic);
      Laurent cr = content_in(r, x);
      g = Laurent::exact_div(r, cr).value();
    }
  }
  Int ic = f.int_content();
  f = f.divide_int(ic * sign_of_lead(f));
  return cont * f;
}

} // namespace detail

// Field of quotients Q(M). Canonical form: fraction reduced, denominator a
// true polynomial with nonzero constant term and positive leading
// coefficient; any net monomial shift lives in the numerator.
class RationalFn {
public:
  RationalFn() : num_(), den_(Int(1)) {}
  RationalFn(Laurent n) : num_(std::move(n)), den_(Int(1)) {}
  explicit RationalFn(Int c) : num_(std::move(c)), den_(Int(1)) {}
  RationalFn(Laurent n, Laurent d) { assign(std::move(n), std::move(d)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("rational: division by zero");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFn operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  bool operator==(const RationalFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RationalFn pow(long long k) const {
    if (k < 0) return RationalFn(Laurent(Int(1))) / pow(-k);
    RationalFn r{Laurent(Int(1))};
    for (long long i = 0; i < k; ++i) r *= *this;
    return r;
  }

private:
  void assign(Laurent n, Laurent d) {
    if (d.is_zero()) throw std::domain_error("rational: zero denominator");
    if (n.is_zero()) {
      num_ = Laurent();
      den_ = Laurent(Int(1));
      return;
    }
    Monomial sn = n.min_monomial_shift(), sd = d.min_monomial_shift();
    Laurent pn = n.shift(sn.inverse()), pd = d.shift(sd.inverse());
    Int in = pn.int_content(), id = pd.int_content();
    Int ig = int_gcd(in, id);
    pn = pn.divide_int(ig);
    pd = pd.divide_int(ig);
    Laurent g = detail::poly_gcd(pn, pd);
    if (!g.is_one()) {
      pn = Laurent::exact_div(pn, g).value();
      pd = Laurent::exact_div(pd, g).value();
    }
    // pd may still carry a monomial factor (gcd removed the rest)
    Monomial rd = pd.min_monomial_shift();
    pd = pd.shift(rd.inverse());
    if (detail::sign_of_lead(pd) < 0) {
      pn = -pn;
      pd = -pd;
    }
    num_ = pn.shift(sn * sd.inverse() * rd.inverse());
    den_ = std::move(pd);
  }

  Laurent num_, den_;
};

} // namespace gae
