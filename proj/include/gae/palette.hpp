#pragma once

#include "gae/cyclo.hpp"
#include "gae/printing.hpp"
#include "gae/rational_fn.hpp"

#include <string>
#include <vector>

namespace gae {

// add to QuadExp: a*b*num/den with a single exactness check at the end
inline QuadExp mul_affine_scaled(const QuadExp& a, const QuadExp& b,
                                 long long num, long long den) {
  // accumulate in 1/16 units, then rescale
  std::map<QuadExp::Key, long long> acc;
  for (const auto& [ka, ca] : a.terms()) {
    if (ka.first != -1) throw std::domain_error("quadexp: mul of degree > 1");
    for (const auto& [kb, cb] : b.terms()) {
      if (kb.first != -1) throw std::domain_error("quadexp: mul of degree > 1");
      QuadExp::Key k;
      if (ka.second == -1 && kb.second == -1) k = {-1, -1};
      else if (ka.second == -1) k = {-1, kb.second};
      else if (kb.second == -1) k = {-1, ka.second};
      else k = {std::min(ka.second, kb.second), std::max(ka.second, kb.second)};
      acc[k] += ca * cb * num;
    }
  }
  QuadExp r;
  for (const auto& [k, v16] : acc) {
    long long d = 4 * den;
    if (v16 % d != 0) throw std::domain_error("quadexp: product leaves (1/4)Z");
    r.add(k, v16 / d);
  }
  return r;
}

// ---------------------------------------------------------------------------
// 1-palette with free multiplicative group: B = Q(M), W = Z
struct FreePalette1 {
  using Ring = Laurent;
  using Frac = RationalFn;
  using Mult = Monomial;
  using Weight = long long;

  static Ring ring_one() { return Laurent(Int(1)); }
  static Ring ring_int(long long c) { return Laurent(Int(c)); }

  // c * m^(a + b*w)
  static Ring mult_pow(const Mult& m, long long a, long long b, const Weight& w,
                       long long c = 1) {
    return Laurent(Int(c), m.pow(a + b * w));
  }
  static bool mult_is_forbidden(const Mult& m) { return m.is_one(); }
  static bool mult_product_trivial(const Mult& m) { return m.is_one(); }
  static Weight weight_zero() { return 0; }
  static Weight weight_int(long long n) { return n; }
  static bool weight_eq(const Weight& a, const Weight& b) { return a == b; }
  static Weight weight_add(const Weight& a, const Weight& b) { return a + b; }
  static Weight weight_neg(const Weight& a) { return -a; }
  // divisor attached to a circle of multiplicity m: m^2 - m^-2
  static Ring circle_divisor(const Mult& m) {
    Laurent r(Int(1), m.pow(2));
    r.add_term(m.pow(-2), Int(-1));
    return r;
  }
};

// ---------------------------------------------------------------------------
// 1-palette built from a 2-palette (section with i^4=1): multiplicities are
// powers i^L with L an affine form, weights are affine forms, B cyclotomic
struct CycloPalette1 {
  using Ring = Cyclo;
  using Frac = CycloFrac;
  using Mult = QuadExp; // the exponent L of i^L; degree <= 1
  using Weight = QuadExp;

  static Ring ring_one() { return Cyclo(Int(1)); }
  static Ring ring_int(long long c) { return Cyclo(Int(c)); }

  static Ring mult_pow(const Mult& m, long long a, long long b, const Weight& w,
                       long long c = 1) {
    QuadExp e = m.scaled(a);
    if (b != 0) e = e + mul_affine_scaled(m, w, b, 1);
    return Cyclo::i_pow(e, Int(c));
  }
  static bool mult_is_forbidden(const Mult& m) {
    auto [key, sign] = m.scaled(4).norm_key();
    return key.is_zero() && sign == 1; // i^(4L) == 1
  }
  static bool mult_product_trivial(const Mult& m) {
    auto [key, sign] = m.norm_key();
    return key.is_zero() && sign == 1;
  }
  static Weight weight_zero() { return {}; }
  static Weight weight_int(long long n) { return QuadExp::constant(n); }
  static bool weight_eq(const Weight& a, const Weight& b) { return a == b; }
  static Weight weight_add(const Weight& a, const Weight& b) { return a + b; }
  static Weight weight_neg(const Weight& a) { return -a; }
  static Ring circle_divisor(const Mult& m) {
    return Cyclo::i_pow(m.scaled(2)) - Cyclo::i_pow(m.scaled(-2));
  }
};

// ---------------------------------------------------------------------------
// palette metadata as declared in a DSL document
enum class PaletteKind { GlFree, GlCyclo, Sl };

struct PaletteDecl {
  PaletteKind kind = PaletteKind::GlFree;
  std::vector<std::string> names; // variables (GlFree) or symbols

  bool is_gl() const { return kind != PaletteKind::Sl; }
};

} // namespace gae
