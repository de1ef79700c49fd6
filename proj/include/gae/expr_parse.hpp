#pragma once

#include "gae/cyclo.hpp"
#include "gae/rational_fn.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <string>

namespace gae {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

struct Lexer {
  std::string src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "' in '" + src + "'");
  }
  bool name_start() {
    char c = peek();
    return std::isalpha((unsigned char)c) || c == '_';
  }
  std::string name() {
    skip_ws();
    size_t s = pos;
    while (pos < src.size() &&
           (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
      ++pos;
    if (s == pos) throw ParseError("expected name in '" + src + "'");
    return src.substr(s, pos - s);
  }
  long long integer() {
    skip_ws();
    bool neg = accept('-');
    if (!std::isdigit((unsigned char)peek()))
      throw ParseError("expected integer in '" + src + "'");
    long long v = 0;
    while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
      v = v * 10 + (src[pos++] - '0');
    return neg ? -v : v;
  }
};

// generic +,-,*,/,^ expression parser over a ring adaptor
template <class R> struct ExprParser {
  Lexer& lx;
  std::function<R(const std::string&)> atom_name;
  std::function<R(long long)> atom_int;
  std::function<R(R, long long)> power;
  std::function<R(R, R)> divide;

  R parse() {
    R v = sum();
    if (!lx.eof()) throw ParseError("trailing input in '" + lx.src + "'");
    return v;
  }
  R sum() {
    bool neg = false;
    if (lx.accept('-')) neg = true;
    else lx.accept('+');
    R v = product();
    if (neg) v = -v;
    for (;;) {
      if (lx.accept('+')) v = v + product();
      else if (lx.accept('-')) v = v - product();
      else return v;
    }
  }
  R product() {
    R v = factor();
    for (;;) {
      if (lx.accept('*')) v = v * factor();
      else if (lx.accept('/')) v = divide(v, factor());
      else return v;
    }
  }
  R factor() {
    R v = atom();
    while (lx.peek() == '^') {
      lx.expect('^');
      long long e;
      if (lx.accept('(')) {
        e = lx.integer();
        lx.expect(')');
      } else {
        e = lx.integer();
      }
      v = power(std::move(v), e);
    }
    return v;
  }
  R atom() {
    if (lx.accept('(')) {
      R v = sum();
      lx.expect(')');
      return v;
    }
    if (lx.name_start()) return atom_name(lx.name());
    return atom_int(lx.integer());
  }
};

inline int lookup(const std::vector<std::string>& names, const std::string& n,
                  const char* what) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return (int)i;
  throw ParseError(std::string("unknown ") + what + " '" + n + "'");
}

} // namespace detail

// degree <= 2 forms in symbols; '/' only by integer constants
inline QuadExp parse_quadexp(const std::string& src,
                             const std::vector<std::string>& syms) {
  struct QV { // form plus "pure integer" tracking for divisions
    QuadExp q;
    bool is_int = false;
    long long iv = 0;
    QV operator-() const { return {-q, is_int, -iv}; }
    QV operator+(const QV& o) const { return {q + o.q, false, 0}; }
    QV operator-(const QV& o) const { return {q - o.q, false, 0}; }
    QV operator*(const QV& o) const {
      if (is_int) return {o.q.scaled(iv), false, 0};
      if (o.is_int) return {q.scaled(o.iv), false, 0};
      return {mul_affine(q, o.q), false, 0};
    }
  };
  detail::Lexer lx{src};
  detail::ExprParser<QV> p{lx};
  p.atom_name = [&](const std::string& n) -> QV {
    return {QuadExp::sym(detail::lookup(syms, n, "symbol")), false, 0};
  };
  p.atom_int = [](long long v) -> QV {
    return {QuadExp::constant(v), true, v};
  };
  p.power = [](QV v, long long e) -> QV {
    if (e == 1) return v;
    if (e == 2) return v * v;
    throw ParseError("only ^1/^2 allowed in weight forms");
  };
  p.divide = [](QV a, QV b) -> QV {
    if (!b.is_int || b.iv == 0) throw ParseError("division only by integers");
    return {a.q.scaled(1, b.iv), false, 0};
  };
  return p.parse().q;
}

inline Monomial parse_monomial(const std::string& src,
                               const std::vector<std::string>& vars) {
  detail::Lexer lx{src};
  detail::ExprParser<Monomial> p{lx};
  p.atom_name = [&](const std::string& n) {
    return Monomial::var(detail::lookup(vars, n, "variable"));
  };
  p.atom_int = [](long long v) -> Monomial {
    if (v != 1) throw ParseError("monomial: only integer literal 1 allowed");
    return Monomial();
  };
  p.power = [](Monomial m, long long e) { return m.pow(e); };
  p.divide = [](Monomial a, Monomial b) { return a * b.inverse(); };
  return p.parse();
}

inline RationalFn parse_rational(const std::string& src,
                                 const std::vector<std::string>& vars) {
  detail::Lexer lx{src};
  detail::ExprParser<RationalFn> p{lx};
  p.atom_name = [&](const std::string& n) {
    return RationalFn(Laurent::var(detail::lookup(vars, n, "variable")));
  };
  p.atom_int = [](long long v) { return RationalFn(Int(v)); };
  p.power = [](RationalFn f, long long e) { return f.pow(e); };
  p.divide = [](RationalFn a, RationalFn b) { return a / b; };
  return p.parse();
}

// elements of the cyclotomic ring; 'i' denotes the distinguished root,
// i^(expr) takes a degree<=2 exponent in the palette symbols
inline CycloFrac parse_cyclofrac(const std::string& src,
                                 const std::vector<std::string>& syms) {
  detail::Lexer lx{src};
  detail::ExprParser<CycloFrac> p{lx};
  p.atom_name = [&](const std::string& n) -> CycloFrac {
    if (n != "i") throw ParseError("cyclo: only 'i' may appear as a base");
    // i alone or i^(quad exponent)
    if (lx.peek() == '^') {
      lx.expect('^');
      QuadExp e;
      if (lx.accept('(')) {
        // capture the balanced exponent and parse as a quad form
        size_t start = lx.pos;
        int depth = 1;
        while (lx.pos < lx.src.size() && depth > 0) {
          if (lx.src[lx.pos] == '(') ++depth;
          if (lx.src[lx.pos] == ')') --depth;
          ++lx.pos;
        }
        if (depth != 0) throw ParseError("unbalanced exponent");
        e = parse_quadexp(lx.src.substr(start, lx.pos - 1 - start), syms);
      } else {
        e = QuadExp::constant(lx.integer());
      }
      return CycloFrac(Cyclo::i_pow(e));
    }
    return CycloFrac(Cyclo::i_pow(QuadExp::constant(1)));
  };
  p.atom_int = [](long long v) { return CycloFrac(Int(v)); };
  p.power = [](CycloFrac f, long long e) { return f.pow(e); };
  p.divide = [](CycloFrac a, CycloFrac b) { return a / b; };
  return p.parse();
}

} // namespace gae
