#pragma once

#include "gae/cyclo.hpp"
#include "gae/rational_fn.hpp"

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace gae {

inline std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.entries()) {
    if (!s.empty()) s += "*";
    s += names.at(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace detail {

inline void append_term(std::string& s, bool lead, const Int& coeff,
                        const std::string& body) {
  Int c = coeff;
  if (lead) {
    if (c < 0) {
      s += "-";
      c = -c;
    }
  } else {
    s += c < 0 ? " - " : " + ";
    if (c < 0) c = -c;
  }
  if (body == "1") {
    s += c.str();
  } else {
    if (c != 1) s += c.str() + "*";
    s += body;
  }
}

} // namespace detail

// terms in lex-descending order of exponent vectors
inline std::string to_string(const Laurent& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  bool lead = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    detail::append_term(s, lead, it->second, to_string(it->first, names));
    lead = false;
  }
  return s;
}

inline std::string to_string(const RationalFn& f, const std::vector<std::string>& names) {
  std::string n = to_string(f.num(), names);
  if (f.is_polynomial()) return n;
  std::string d = to_string(f.den(), names);
  if (f.num().size() > 1) n = "(" + n + ")";
  if (f.den().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

inline std::string to_string(const QuadExp& e, const std::vector<std::string>& syms) {
  if (e.is_zero()) return "0";
  long long den = 1;
  for (const auto& [k, q] : e.terms()) {
    if (q % 4 != 0) den = std::max(den, q % 2 == 0 ? 2LL : 4LL);
  }
  std::string s;
  bool lead = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [k, q] = *it;
    std::string body = "1";
    if (k.first == -1 && k.second >= 0) {
      body = syms.at(k.second);
    } else if (k.first >= 0) {
      body = k.first == k.second ? syms.at(k.first) + "^2"
                                 : syms.at(k.first) + "*" + syms.at(k.second);
    }
    detail::append_term(s, lead, Int(q * den / 4), body);
    lead = false;
  }
  if (den == 1) return s;
  if (e.terms().size() > 1) s = "(" + s + ")";
  return s + "/" + std::to_string(den);
}

inline std::string to_string(const Cyclo& x, const std::vector<std::string>& syms) {
  if (x.is_zero()) return "0";
  std::string s;
  bool lead = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string body;
    if (e.is_zero()) {
      body = "1";
    } else if (e.is_constant() && e.constant_quarters() == 4) {
      body = "i";
    } else {
      body = "i^(" + to_string(e, syms) + ")";
    }
    detail::append_term(s, lead, c, body);
    lead = false;
  }
  return s;
}

inline std::string to_string(const CycloFrac& f, const std::vector<std::string>& syms) {
  std::string n = to_string(f.num(), syms);
  if (f.den().is_one()) return n;
  std::string d = to_string(f.den(), syms);
  if (f.num().size() > 1) n = "(" + n + ")";
  if (f.den().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

} // namespace gae
