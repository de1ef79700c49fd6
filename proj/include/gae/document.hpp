#pragma once

#include "gae/diagram.hpp"
#include "gae/palette.hpp"

#include <functional>
#include <sstream>

namespace gae {

// per-edge color data; fields used depend on the palette kind
struct EdgeColorData {
  int orient = 0;        // +1 up at the anchor germ, -1 down, 0 unspecified
  Monomial mult;         // GlFree multiplicity
  QuadExp multExp;       // GlCyclo: multiplicity is i^multExp
  QuadExp weight;        // GlCyclo / Sl weight (affine form)
  long long weightInt = 0; // GlFree weight
};

struct Document {
  PaletteDecl palette;
  std::vector<std::string> edgeNames;
  std::vector<EdgeColorData> edgeColors;
  SlicedDiagram diagram;

  int edge_id(const std::string& name) const {
    for (size_t i = 0; i < edgeNames.size(); ++i)
      if (edgeNames[i] == name) return (int)i;
    return -1;
  }
};

// ---------------------------------------------------------------------------
// structural validation: strand counts, edge continuity, flow propagation

inline Layout build_layout(const Document& doc) {
  Layout lay;
  const auto& slices = doc.diagram.slices;
  const int S = (int)slices.size();
  auto err = [&](const std::string& m) { lay.errors.push_back(m); };

  // gap strand lists with edge ids
  lay.gaps.assign(S + 1, {});
  {
    // gap 0 from slice 1 bottoms
    if (S > 0) {
      for (const auto& g : slices[0])
        for (int p = 0; p < bottom_arity(g.kind); ++p)
          lay.gaps[0].push_back({g.edges.at(port_slot(g.kind, p)), 0, -1});
    }
    for (int s = 0; s < S; ++s) {
      for (const auto& g : slices[s]) {
        int ba = bottom_arity(g.kind), ta = top_arity(g.kind);
        for (int p = 0; p < ta; ++p)
          lay.gaps[s + 1].push_back({g.edges.at(port_slot(g.kind, ba + p)), 0, -1});
      }
      if (s + 1 < S) {
        size_t need = 0;
        for (const auto& g : slices[s + 1]) need += bottom_arity(g.kind);
        if (need != lay.gaps[s + 1].size()) {
          std::ostringstream os;
          os << "strand-count mismatch between slice " << (s + 1) << " and slice "
             << (s + 2) << ": " << lay.gaps[s + 1].size() << " vs " << need;
          err(os.str());
          return lay;
        }
        // edge continuity across the gap
        size_t pos = 0;
        for (const auto& g : slices[s + 1]) {
          for (int p = 0; p < bottom_arity(g.kind); ++p, ++pos) {
            int e = g.edges.at(port_slot(g.kind, p));
            if (lay.gaps[s + 1][pos].edge != e) {
              std::ostringstream os;
              os << "edge mismatch at gap " << (s + 1) << " position " << pos
                 << ": '" << doc.edgeNames.at(lay.gaps[s + 1][pos].edge)
                 << "' from below vs '" << doc.edgeNames.at(e) << "' from above";
              err(os.str());
            }
          }
        }
      }
    }
  }
  if (!lay.errors.empty()) return lay;

  // flow constraints: pairs of gap strands forced equal, plus fixed values
  struct VarRef { int gap, pos; };
  auto vid = [&](int gap, int pos) {
    int id = 0;
    for (int g = 0; g < gap; ++g) id += (int)lay.gaps[g].size();
    return id + pos;
  };
  int nvars = 0;
  for (const auto& g : lay.gaps) nvars += (int)g.size();
  std::vector<std::vector<int>> adj(nvars);
  std::vector<int> fixed(nvars, 0);
  std::vector<int> anchor_of_edge(doc.edgeNames.size(), -1);

  for (int s = 0; s < S; ++s) {
    int bpos = 0, tpos = 0;
    for (const auto& g : slices[s]) {
      int ba = bottom_arity(g.kind);
      int b0 = vid(s, bpos), t0 = vid(s + 1, tpos);
      auto mark_anchor = [&](int slot, int var) {
        int e = g.edges.at(slot);
        if (anchor_of_edge[e] == -1) anchor_of_edge[e] = var;
      };
      switch (g.kind) {
        case GenKind::Identity:
        case GenKind::TwistPos:
        case GenKind::TwistNeg:
          adj[b0].push_back(t0);
          adj[t0].push_back(b0);
          mark_anchor(0, b0);
          break;
        case GenKind::CrossPos:
        case GenKind::CrossNeg:
          adj[b0].push_back(t0 + 1);
          adj[t0 + 1].push_back(b0);
          adj[b0 + 1].push_back(t0);
          adj[t0].push_back(b0 + 1);
          mark_anchor(0, b0);
          mark_anchor(1, b0 + 1);
          break;
        case GenKind::CupLeft:
          fixed[t0] = +1;
          fixed[t0 + 1] = -1;
          mark_anchor(0, t0);
          break;
        case GenKind::CupRight:
          fixed[t0] = -1;
          fixed[t0 + 1] = +1;
          mark_anchor(0, t0);
          break;
        case GenKind::CapLeft:
          fixed[b0] = +1;
          fixed[b0 + 1] = -1;
          mark_anchor(0, b0);
          break;
        case GenKind::CapRight:
          fixed[b0] = -1;
          fixed[b0 + 1] = +1;
          mark_anchor(0, b0);
          break;
        case GenKind::VertexMerge:
          mark_anchor(0, b0);
          mark_anchor(1, b0 + 1);
          mark_anchor(2, t0);
          break;
        case GenKind::VertexSplit:
          mark_anchor(0, b0);
          mark_anchor(1, t0);
          mark_anchor(2, t0 + 1);
          break;
      }
      bpos += ba;
      tpos += top_arity(g.kind);
    }
  }

  // flows as values on variables; propagate equality constraints
  std::vector<int> flow(nvars, 0);
  std::vector<int> var_edge(nvars, -1);
  {
    int id = 0;
    for (const auto& g : lay.gaps)
      for (const auto& st : g) var_edge[id++] = st.edge;
  }
  auto propagate = [&](int start) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (flow[w] == 0) {
          flow[w] = flow[v];
          stack.push_back(w);
        } else if (flow[w] != flow[v]) {
          err("inconsistent strand orientation on edge '" +
              doc.edgeNames.at(var_edge[w]) + "'");
          return;
        }
      }
    }
  };
  for (int v = 0; v < nvars && lay.errors.empty(); ++v)
    if (fixed[v] != 0) {
      if (flow[v] == 0) flow[v] = fixed[v];
      else if (flow[v] != fixed[v])
        err("cup/cap kind conflicts with orientation on edge '" +
            doc.edgeNames.at(var_edge[v]) + "'");
      if (lay.errors.empty()) propagate(v);
    }
  for (size_t e = 0; e < doc.edgeNames.size() && lay.errors.empty(); ++e) {
    int orient = doc.edgeColors[e].orient;
    if (orient == 0 || anchor_of_edge[e] < 0) continue;
    int v = anchor_of_edge[e];
    if (flow[v] == 0) {
      flow[v] = orient;
      propagate(v);
    } else if (flow[v] != orient) {
      err("declared orientation of edge '" + doc.edgeNames[e] +
          "' conflicts with the diagram");
    }
  }
  // canonical default for anything still undetermined (sl files)
  for (int v = 0; v < nvars && lay.errors.empty(); ++v)
    if (flow[v] == 0) {
      flow[v] = +1;
      propagate(v);
    }
  if (!lay.errors.empty()) return lay;

  {
    int id = 0;
    for (auto& g : lay.gaps)
      for (auto& st : g) st.flow = flow[id++];
  }

  // every declared edge must occur
  std::vector<char> used(doc.edgeNames.size(), 0);
  for (const auto& sl : slices)
    for (const auto& g : sl)
      for (int e : g.edges) used.at(e) = 1;
  for (size_t e = 0; e < used.size(); ++e)
    if (!used[e]) err("declared edge '" + doc.edgeNames[e] + "' is not used");

  // each edge name must label exactly one 1-stratum
  {
    std::vector<int> uf(nvars);
    for (int v = 0; v < nvars; ++v) uf[v] = v;
    std::function<int(int)> find = [&](int v) {
      while (uf[v] != v) v = uf[v] = uf[uf[v]];
      return v;
    };
    for (int v = 0; v < nvars; ++v)
      for (int w : adj[v]) uf[find(v)] = find(w);
    std::vector<int> edge_class(doc.edgeNames.size(), -1);
    for (int v = 0; v < nvars; ++v) {
      int e = var_edge[v], c = find(v);
      if (edge_class[e] == -1) edge_class[e] = c;
      else if (edge_class[e] != c)
        err("edge '" + doc.edgeNames[e] + "' labels more than one 1-stratum");
    }
  }

  return lay;
}

// classification helper: closed or (k,l)-morphism
inline std::string classify(const Layout& lay) {
  if (!lay.ok()) return "invalid";
  if (lay.closed()) return "closed";
  std::ostringstream os;
  os << "(" << lay.bottom_count() << "," << lay.top_count() << ")-morphism";
  return os.str();
}

} // namespace gae
