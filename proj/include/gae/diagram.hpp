#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gae {

enum class GenKind {
  Identity,
  CupLeft,   // strand oriented up at the left leg
  CupRight,  // strand oriented up at the right leg
  CapLeft,
  CapRight,
  CrossPos,  // strand entering bottom-left passes over
  CrossNeg,
  TwistPos,
  TwistNeg,
  VertexMerge, // two bottom germs, one top
  VertexSplit  // one bottom germ, two top
};

inline int bottom_arity(GenKind k) {
  switch (k) {
    case GenKind::Identity:
    case GenKind::TwistPos:
    case GenKind::TwistNeg:
    case GenKind::VertexSplit: return 1;
    case GenKind::CupLeft:
    case GenKind::CupRight: return 0;
    case GenKind::CapLeft:
    case GenKind::CapRight:
    case GenKind::CrossPos:
    case GenKind::CrossNeg:
    case GenKind::VertexMerge: return 2;
  }
  return 0;
}
inline int top_arity(GenKind k) {
  switch (k) {
    case GenKind::Identity:
    case GenKind::TwistPos:
    case GenKind::TwistNeg:
    case GenKind::VertexMerge: return 1;
    case GenKind::CapLeft:
    case GenKind::CapRight: return 0;
    case GenKind::CupLeft:
    case GenKind::CupRight:
    case GenKind::CrossPos:
    case GenKind::CrossNeg: return 2;
    case GenKind::VertexSplit: return 2;
  }
  return 0;
}
inline bool is_vertex(GenKind k) {
  return k == GenKind::VertexMerge || k == GenKind::VertexSplit;
}
inline bool is_crossing(GenKind k) {
  return k == GenKind::CrossPos || k == GenKind::CrossNeg;
}
inline bool is_cup(GenKind k) {
  return k == GenKind::CupLeft || k == GenKind::CupRight;
}
inline bool is_cap(GenKind k) {
  return k == GenKind::CapLeft || k == GenKind::CapRight;
}
inline bool is_twist(GenKind k) {
  return k == GenKind::TwistPos || k == GenKind::TwistNeg;
}

// number of edge-name slots in the DSL
inline int edge_slots(GenKind k) {
  if (is_vertex(k)) return 3;
  if (is_crossing(k)) return 2;
  return 1;
}

// DSL slot of each port, ports numbered bottoms left-to-right then tops
inline int port_slot(GenKind k, int port) {
  switch (k) {
    case GenKind::CrossPos:
    case GenKind::CrossNeg: {
      // slot0: bl<->tr strand, slot1: br<->tl strand
      static constexpr int m[4] = {0, 1, 1, 0};
      return m[port];
    }
    case GenKind::VertexMerge: { // u=b0, v=b1, t=top
      static constexpr int m[3] = {0, 1, 2};
      return m[port];
    }
    case GenKind::VertexSplit: { // t=b0, u=t0, v=t1
      static constexpr int m[3] = {0, 1, 2};
      return m[port];
    }
    default: return 0;
  }
}

inline const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::Identity: return "id";
    case GenKind::CupLeft: return "cupLeft";
    case GenKind::CupRight: return "cupRight";
    case GenKind::CapLeft: return "capLeft";
    case GenKind::CapRight: return "capRight";
    case GenKind::CrossPos: return "crossPos";
    case GenKind::CrossNeg: return "crossNeg";
    case GenKind::TwistPos: return "twistPos";
    case GenKind::TwistNeg: return "twistNeg";
    case GenKind::VertexMerge: return "vertexMerge";
    case GenKind::VertexSplit: return "vertexSplit";
  }
  return "?";
}

inline std::optional<GenKind> kind_from_name(const std::string& s) {
  static const std::map<std::string, GenKind> m = {
      {"id", GenKind::Identity},         {"cupLeft", GenKind::CupLeft},
      {"cupRight", GenKind::CupRight},   {"capLeft", GenKind::CapLeft},
      {"capRight", GenKind::CapRight},   {"crossPos", GenKind::CrossPos},
      {"crossNeg", GenKind::CrossNeg},   {"twistPos", GenKind::TwistPos},
      {"twistNeg", GenKind::TwistNeg},   {"vertexMerge", GenKind::VertexMerge},
      {"vertexSplit", GenKind::VertexSplit}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

struct Generator {
  GenKind kind = GenKind::Identity;
  std::vector<int> edges; // edge id per DSL slot
  bool cw = false;        // cyclic order at a strong vertex

  bool operator==(const Generator&) const = default;
};

struct SlicedDiagram {
  std::vector<std::vector<Generator>> slices;

  bool operator==(const SlicedDiagram&) const = default;
};

// -----------------------------------------------------------------------
// geometric layout computed by validation: strand positions per gap with
// edge ids and flow directions

struct GapStrand {
  int edge = -1;
  int flow = 0;  // +1 strand oriented upward here, -1 downward, 0 unknown
  int arc = -1;  // diagram 1-stratum id, filled by strata extraction
};

struct PortRef {
  int slice = -1; // 1-based slice index
  int gen = -1;
  int port = -1;
  bool operator==(const PortRef&) const = default;
};

struct Layout {
  // gaps 0..S; gap g strands sit between slice g and slice g+1
  std::vector<std::vector<GapStrand>> gaps;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
  bool closed() const {
    return ok() && gaps.front().empty() && gaps.back().empty();
  }
  int bottom_count() const { return (int)gaps.front().size(); }
  int top_count() const { return (int)gaps.back().size(); }
};

} // namespace gae
