#pragma once

#include "gae/document.hpp"
#include "gae/expr_parse.hpp"

#include <sstream>

namespace gae {

struct DslError : std::runtime_error {
  int line, col;
  DslError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line), col(col) {}
};

namespace detail {

struct LineTokens {
  std::vector<std::string> toks;
  std::vector<int> cols;
  int line;
};

inline std::vector<LineTokens> tokenize_dsl(const std::string& src) {
  std::vector<LineTokens> out;
  std::istringstream in(src);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    LineTokens lt;
    lt.line = lineno;
    size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '#') break;
      if (std::isspace((unsigned char)c) || c == ',') {
        ++i;
        continue;
      }
      if (c == '(' || c == ')') {
        lt.toks.push_back(std::string(1, c));
        lt.cols.push_back((int)i + 1);
        ++i;
        continue;
      }
      size_t s = i;
      while (i < raw.size() && !std::isspace((unsigned char)raw[i]) &&
             raw[i] != '(' && raw[i] != ')' && raw[i] != ',' && raw[i] != '#')
        ++i;
      lt.toks.push_back(raw.substr(s, i - s));
      lt.cols.push_back((int)s + 1);
    }
    if (!lt.toks.empty()) out.push_back(std::move(lt));
  }
  return out;
}

} // namespace detail

inline Document parse_document(const std::string& src) {
  Document doc;
  bool have_palette = false;
  auto lines = detail::tokenize_dsl(src);

  for (const auto& lt : lines) {
    auto fail = [&](size_t tok, const std::string& msg) -> void {
      int col = tok < lt.cols.size() ? lt.cols[tok] : 1;
      throw DslError(lt.line, col, msg);
    };
    const auto& t = lt.toks;
    if (t[0] == "palette") {
      if (have_palette) fail(0, "duplicate palette declaration");
      if (t.size() < 3) fail(0, "palette needs kind and names");
      if (t[1] == "gl" && t[2] == "vars") doc.palette.kind = PaletteKind::GlFree;
      else if (t[1] == "gl" && t[2] == "syms") doc.palette.kind = PaletteKind::GlCyclo;
      else if (t[1] == "sl" && t[2] == "syms") doc.palette.kind = PaletteKind::Sl;
      else fail(1, "palette must be 'gl vars', 'gl syms' or 'sl syms'");
      for (size_t i = 3; i < t.size(); ++i) {
        if (t[i] == "i") fail(i, "'i' is reserved for the distinguished root");
        doc.palette.names.push_back(t[i]);
      }
      if (doc.palette.names.empty()) fail(2, "palette needs at least one name");
      have_palette = true;
      continue;
    }
    if (!have_palette) fail(0, "palette declaration must come first");

    if (t[0] == "edge") {
      if (t.size() < 2) fail(0, "edge needs a name");
      const std::string& name = t[1];
      if (doc.edge_id(name) >= 0) fail(1, "duplicate edge declaration '" + name + "'");
      EdgeColorData cd;
      size_t i = 2;
      auto want = [&](const char* kw) {
        if (i >= t.size() || t[i] != kw)
          fail(i < t.size() ? i : t.size() - 1,
               std::string("expected '") + kw + "' in edge declaration");
        ++i;
        if (i >= t.size()) fail(t.size() - 1, std::string("missing value after '") + kw + "'");
      };
      try {
        if (doc.palette.kind == PaletteKind::Sl) {
          if (i < t.size() && t[i] == "orient") {
            want("orient");
            cd.orient = t[i] == "up" ? +1 : t[i] == "down" ? -1 : 0;
            if (cd.orient == 0) fail(i, "orient must be up or down");
            ++i;
          }
          want("weight");
          std::string w;
          while (i < t.size()) w += t[i++];
          cd.weight = parse_quadexp(w, doc.palette.names);
          if (!cd.weight.degree_le1()) fail(2, "sl weight must be an affine form");
        } else {
          want("orient");
          cd.orient = t[i] == "up" ? +1 : t[i] == "down" ? -1 : 0;
          if (cd.orient == 0) fail(i, "orient must be up or down");
          ++i;
          want("mult");
          std::string m = t[i++];
          want("weight");
          std::string w;
          while (i < t.size()) w += t[i++];
          if (doc.palette.kind == PaletteKind::GlFree) {
            cd.mult = parse_monomial(m, doc.palette.names);
            detail::Lexer lx{w};
            cd.weightInt = lx.integer();
            if (!lx.eof()) fail(2, "gl weight must be an integer");
          } else {
            // multiplicity written i^(<affine form>) or i^<int>
            if (m.size() < 2 || m[0] != 'i' || m[1] != '^')
              fail(2, "gl-syms multiplicity must be a power of i");
            std::string e = m.substr(2);
            if (!e.empty() && e.front() == '(') {
              if (e.back() != ')') fail(2, "unbalanced exponent");
              e = e.substr(1, e.size() - 2);
            }
            cd.multExp = parse_quadexp(e, doc.palette.names);
            if (!cd.multExp.degree_le1()) fail(2, "multiplicity exponent must be affine");
            cd.weight = parse_quadexp(w, doc.palette.names);
            if (!cd.weight.degree_le1()) fail(2, "gl-syms weight must be an affine form");
          }
        }
      } catch (const ParseError& pe) {
        fail(2, pe.what());
      }
      doc.edgeNames.push_back(name);
      doc.edgeColors.push_back(std::move(cd));
      continue;
    }

    if (t[0] == "slice") {
      std::vector<Generator> slice;
      size_t i = 1;
      while (i < t.size()) {
        auto kind = kind_from_name(t[i]);
        if (!kind) fail(i, "unknown generator '" + t[i] + "'");
        ++i;
        if (i >= t.size() || t[i] != "(") fail(i - 1, "expected '(' after generator");
        ++i;
        Generator g;
        g.kind = *kind;
        while (i < t.size() && t[i] != ")") {
          int e = doc.edge_id(t[i]);
          if (e < 0) fail(i, "undeclared edge '" + t[i] + "'");
          g.edges.push_back(e);
          ++i;
        }
        if (i >= t.size()) fail(i - 1, "missing ')'");
        ++i; // ')'
        if (i < t.size() && t[i] == "cw") {
          if (!is_vertex(g.kind)) fail(i, "'cw' only applies to vertex generators");
          g.cw = true;
          ++i;
        }
        if ((int)g.edges.size() != edge_slots(g.kind))
          fail(i - 1, std::string("arity mismatch: ") + kind_name(g.kind) +
                          " takes " + std::to_string(edge_slots(g.kind)) +
                          " edge name(s), got " + std::to_string(g.edges.size()));
        slice.push_back(std::move(g));
      }
      if (slice.empty()) fail(0, "empty slice");
      doc.diagram.slices.push_back(std::move(slice));
      continue;
    }

    fail(0, "unknown statement '" + t[0] + "'");
  }
  if (!have_palette) throw DslError(1, 1, "missing palette declaration");
  if (doc.diagram.slices.empty()) throw DslError(1, 1, "no slices");
  return doc;
}

// canonical DSL rendering; parse(print(doc)) == doc
inline std::string print_dsl(const Document& doc) {
  std::ostringstream os;
  os << "palette " << (doc.palette.kind == PaletteKind::Sl ? "sl" : "gl") << " "
     << (doc.palette.kind == PaletteKind::GlFree ? "vars" : "syms");
  for (const auto& n : doc.palette.names) os << " " << n;
  os << "\n";
  for (size_t e = 0; e < doc.edgeNames.size(); ++e) {
    const auto& cd = doc.edgeColors[e];
    os << "edge " << doc.edgeNames[e];
    if (doc.palette.kind == PaletteKind::Sl) {
      if (cd.orient != 0) os << " orient " << (cd.orient > 0 ? "up" : "down");
      os << " weight " << to_string(cd.weight, doc.palette.names);
    } else if (doc.palette.kind == PaletteKind::GlFree) {
      os << " orient " << (cd.orient > 0 ? "up" : "down") << " mult "
         << to_string(cd.mult, doc.palette.names) << " weight " << cd.weightInt;
    } else {
      os << " orient " << (cd.orient > 0 ? "up" : "down") << " mult i^("
         << to_string(cd.multExp, doc.palette.names) << ") weight "
         << to_string(cd.weight, doc.palette.names);
    }
    os << "\n";
  }
  for (const auto& slice : doc.diagram.slices) {
    os << "slice";
    for (const auto& g : slice) {
      os << " " << kind_name(g.kind) << "(";
      for (size_t k = 0; k < g.edges.size(); ++k)
        os << (k ? " " : "") << doc.edgeNames.at(g.edges[k]);
      os << ")";
      if (g.cw) os << " cw";
    }
    os << "\n";
  }
  return os.str();
}

} // namespace gae
