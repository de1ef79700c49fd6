#pragma once

#include "gae/cyclo.hpp"
#include "gae/rational_fn.hpp"

#include <complex>
#include <numbers>
#include <vector>

namespace gae {

using Cplx = std::complex<double>;

inline Cplx eval_numeric(const Monomial& m, const std::vector<Cplx>& vars) {
  Cplx r = 1.0;
  for (const auto& [v, e] : m.entries()) r *= std::pow(vars.at(v), (double)e);
  return r;
}

inline Cplx eval_numeric(const Laurent& p, const std::vector<Cplx>& vars) {
  Cplx r = 0.0;
  for (const auto& [m, c] : p.terms())
    r += (double)c.convert_to<double>() * eval_numeric(m, vars);
  return r;
}

inline Cplx eval_numeric(const RationalFn& f, const std::vector<Cplx>& vars) {
  return eval_numeric(f.num(), vars) / eval_numeric(f.den(), vars);
}

inline Cplx eval_numeric(const QuadExp& e, const std::vector<Cplx>& syms) {
  Cplx r = 0.0;
  for (const auto& [k, q] : e.terms()) {
    Cplx body = 1.0;
    if (k.first == -1 && k.second >= 0) body = syms.at(k.second);
    if (k.first >= 0) body = syms.at(k.first) * syms.at(k.second);
    r += (double)q / 4.0 * body;
  }
  return r;
}

// i^E evaluates as exp(E * pi * sqrt(-1) / 2)
inline Cplx eval_numeric(const Cyclo& x, const std::vector<Cplx>& syms) {
  Cplx r = 0.0;
  const Cplx half_pi_i(0.0, std::numbers::pi / 2.0);
  for (const auto& [e, c] : x.terms())
    r += (double)c.convert_to<double>() * std::exp(half_pi_i * eval_numeric(e, syms));
  return r;
}

inline Cplx eval_numeric(const CycloFrac& f, const std::vector<Cplx>& syms) {
  return eval_numeric(f.num(), syms) / eval_numeric(f.den(), syms);
}

} // namespace gae
