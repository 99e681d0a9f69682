#pragma once

#include <set>
#include <string>
#include <vector>

#include "imlab/hilbert.hpp"
#include "imlab/relation.hpp"

namespace imlab {

/// Finite birelational frame: a preorder (intuitionistic) and a transitive modal relation.
class BirelFrame {
public:
  /// Throws unless `pre` is a preorder and `mod` is transitive.
  BirelFrame(Relation pre, Relation mod)
      : pre_(std::move(pre)), mod_(std::move(mod)), lead_(pre_.size()) {
    require_same_size(pre_, mod_);
    if (!pre_.is_preorder()) throw Error("intuitionistic relation is not a preorder: " + to_string(pre_));
    if (!mod_.is_transitive()) throw Error("modal relation is not transitive: " + to_string(mod_));
    lead_ = transitive_closure(compose(pre_, mod_));
  }

  /// Builds a frame from generator edges, closing both relations.
  static BirelFrame from_generators(int n, const std::vector<std::pair<int, int>>& pre_edges,
                                    const std::vector<std::pair<int, int>>& mod_edges) {
    return BirelFrame(reflexive_transitive_closure(Relation(n, pre_edges)), transitive_closure(Relation(n, mod_edges)));
  }

  int size() const { return pre_.size(); }
  const Relation& pre() const { return pre_; }
  const Relation& mod() const { return mod_; }
  /// (pre ; mod)^+, the relation interpreting box.
  const Relation& lead() const { return lead_; }

  friend bool operator==(const BirelFrame& a, const BirelFrame& b) { return a.pre_ == b.pre_ && a.mod_ == b.mod_; }

private:
  Relation pre_;
  Relation mod_;
  Relation lead_;
};

inline Relation lead_relation(const BirelFrame& f) { return f.lead(); }

struct FrameProperties {
  bool forward_confluent = false;
  bool backward_confluent = false;
  bool downward_confluent = false;
  bool locally_linear = false;
  bool mod_reflexive = false;
  bool mod_irreflexive = false;
};

/// w mod v and w pre w' imply some v' with w' mod v' and v pre v'.
inline bool forward_confluent(const BirelFrame& f) {
  for (int w = 0; w < f.size(); ++w) {
    for (int v : f.mod().successors(w).members()) {
      for (int w2 : f.pre().successors(w).members()) {
        if (!f.mod().successors(w2).intersects(f.pre().successors(v))) return false;
      }
    }
  }
  return true;
}

/// w mod v pre v' implies some w' with w pre w' mod v'.
inline bool backward_confluent(const BirelFrame& f) {
  for (int w = 0; w < f.size(); ++w) {
    for (int v : f.mod().successors(w).members()) {
      for (int v2 : f.pre().successors(v).members()) {
        bool found = false;
        f.pre().successors(w).for_each([&](int w2) { found = found || f.mod().contains(w2, v2); });
        if (!found) return false;
      }
    }
  }
  return true;
}

/// w pre v mod v' implies some w' with w mod w' pre v'.
inline bool downward_confluent(const BirelFrame& f) {
  for (int w = 0; w < f.size(); ++w) {
    for (int v : f.pre().successors(w).members()) {
      for (int v2 : f.mod().successors(v).members()) {
        bool found = false;
        f.mod().successors(w).for_each([&](int w2) { found = found || f.pre().contains(w2, v2); });
        if (!found) return false;
      }
    }
  }
  return true;
}

/// Every pre-cone is totally preordered.
inline bool locally_linear(const Relation& pre) {
  for (int w = 0; w < pre.size(); ++w) {
    for (int v : pre.successors(w).members()) {
      for (int u : pre.successors(w).members()) {
        if (!pre.contains(v, u) && !pre.contains(u, v)) return false;
      }
    }
  }
  return true;
}

inline FrameProperties frame_properties(const BirelFrame& f) {
  return FrameProperties{forward_confluent(f), backward_confluent(f), downward_confluent(f),
                         locally_linear(f.pre()), f.mod().is_reflexive(), f.mod().is_irreflexive()};
}

/// Frame-class membership from precomputed properties.
///
/// GK4 requires the IK4 conditions in addition to local linearity, and the
/// crisp classes add downward confluence to that.
inline bool in_frame_class(const FrameProperties& p, LogicId l) {
  if (is_s4_family(l) && !p.mod_reflexive) return false;
  bool ik = p.forward_confluent && p.backward_confluent;
  switch (l) {
    case LogicId::CK4:
    case LogicId::CS4: return true;
    case LogicId::IK4:
    case LogicId::IS4: return ik;
    case LogicId::K4I:
    case LogicId::S4I: return p.forward_confluent && p.downward_confluent;
    case LogicId::GK4:
    case LogicId::GS4: return ik && p.locally_linear;
    case LogicId::GK4c:
    case LogicId::GS4c: return ik && p.locally_linear && p.downward_confluent;
  }
  return false;
}

inline std::vector<LogicId> classify_frame(const BirelFrame& f) {
  FrameProperties p = frame_properties(f);
  std::vector<LogicId> out;
  for (LogicId l : kAllLogics) {
    if (in_frame_class(p, l)) out.push_back(l);
  }
  return out;
}

inline bool in_frame_class(const BirelFrame& f, LogicId l) { return in_frame_class(frame_properties(f), l); }

}  // namespace imlab
