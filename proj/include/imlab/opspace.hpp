#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "imlab/frame.hpp"
#include "imlab/topology.hpp"

namespace imlab {

/// A map on the powerset of {0..n-1}, tabulated in full (2^n entries).
class SetOperator {
public:
  template <class F>
  static SetOperator tabulate(int n, F&& f) {
    check_world_count(n, kMaxSweepWorlds);
    SetOperator op;
    op.n_ = n;
    op.table_.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (1U << n); ++m) op.table_.push_back(f(WorldSet(m)));
    return op;
  }

  static SetOperator identity(int n) {
    return tabulate(n, [](WorldSet a) { return a; });
  }

  int size() const { return n_; }
  WorldSet operator()(WorldSet a) const { return table_[a.bits()]; }
  const std::vector<WorldSet>& table() const { return table_; }
  WorldSet points() const { return WorldSet::full(n_); }

  friend bool operator==(const SetOperator&, const SetOperator&) = default;

private:
  int n_ = 0;
  std::vector<WorldSet> table_;
};

/// op'(A) = X \ op(X \ A).
inline SetOperator dualize(const SetOperator& op) {
  int n = op.size();
  return SetOperator::tabulate(n, [&](WorldSet a) { return op(a.complement(n)).complement(n); });
}

/// Pointwise composition: (f * g)(A) = f(g(A)).
inline SetOperator operator*(const SetOperator& f, const SetOperator& g) {
  return SetOperator::tabulate(f.size(), [&](WorldSet a) { return f(g(a)); });
}

enum class OperatorKind { derivative, integral, closure, interior };

struct LawReport {
  bool ok = true;
  std::string law;
  WorldSet witness_a;
  WorldSet witness_b;

  explicit operator bool() const { return ok; }
};

/// Checks the operator laws of `kind` over every subset (and pair of subsets).
inline LawReport law_report(const SetOperator& op, OperatorKind kind) {
  const int n = op.size();
  const std::uint32_t count = 1U << n;
  const WorldSet all = op.points();
  auto fail = [](std::string law, WorldSet a, WorldSet b = {}) { return LawReport{false, std::move(law), a, b}; };
  const bool derivative_like = kind == OperatorKind::derivative || kind == OperatorKind::closure;
  if (derivative_like) {
    if (!op(WorldSet{}).empty()) return fail("d(empty) = empty", WorldSet{});
  } else if (op(all) != all) {
    return fail("e(X) = X", all);
  }
  for (std::uint32_t i = 0; i < count; ++i) {
    WorldSet a(i);
    if (derivative_like) {
      if (!op(op(a)).subset_of(op(a))) return fail("d(d(A)) within d(A)", a);
      if (kind == OperatorKind::closure && !a.subset_of(op(a))) return fail("A within c(A)", a);
    } else {
      if (!op(a).subset_of(op(op(a)))) return fail("e(A) within e(e(A))", a);
      if (kind == OperatorKind::interior && !op(a).subset_of(a)) return fail("i(A) within A", a);
    }
  }
  // Binary additivity is equivalent to d(A) = union of d({x}) over x in A. Scanning
  // masks upward makes the first failure minimal, so splitting off its least
  // element yields a failing pair.
  for (std::uint32_t i = 1; i < count; ++i) {
    if (derivative_like) {
      WorldSet a(i);
      WorldSet x = WorldSet::singleton(a.first());
      WorldSet rest = a - x;
      if (op(a) != (op(rest) | op(x))) return fail("d(A u B) = d(A) u d(B)", rest, x);
    } else {
      // Dually for meets, indexed by the complement.
      WorldSet missing(i);
      WorldSet x = WorldSet::singleton(missing.first());
      WorldSet a = missing.complement(n);
      WorldSet b = all - x;
      WorldSet c = a | x;
      if (op(a) != (op(c) & op(b))) return fail("e(A n B) = e(A) n e(B)", c, b);
    }
  }
  return {};
}

/// Open sets of an operator: e-open sets for integrals, complements of d-closed sets for derivatives.
inline FiniteTopology opens_of(const SetOperator& op, OperatorKind kind) {
  LawReport r = law_report(op, kind);
  if (!r) throw Error("operator violates law " + r.law + " at A=" + to_string(r.witness_a));
  const int n = op.size();
  std::vector<WorldSet> opens;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    WorldSet a(m);
    bool open = (kind == OperatorKind::integral || kind == OperatorKind::interior)
                    ? a.subset_of(op(a))
                    : op(a.complement(n)).subset_of(a.complement(n));
    if (open) opens.push_back(a);
  }
  return FiniteTopology(n, std::move(opens));
}

/// An extensional polyderivative space: interior for implication, derivative for
/// diamond, integral for box.
struct OperatorSpace {
  SetOperator arrow;  // i_->
  SetOperator dia;    // d_<>
  SetOperator box;    // e_[]

  int size() const { return arrow.size(); }
  WorldSet points() const { return arrow.points(); }
};

/// First failing space law, or ok.
inline LawReport space_report(const OperatorSpace& s) {
  if (s.dia.size() != s.size() || s.box.size() != s.size()) return {false, "operator world counts differ", {}, {}};
  if (LawReport r = law_report(s.arrow, OperatorKind::interior); !r) return {false, "i_->: " + r.law, r.witness_a, r.witness_b};
  if (LawReport r = law_report(s.dia, OperatorKind::derivative); !r) return {false, "d_<>: " + r.law, r.witness_a, r.witness_b};
  if (LawReport r = law_report(s.box, OperatorKind::integral); !r) return {false, "e_[]: " + r.law, r.witness_a, r.witness_b};
  // i_<> is the interior operator of the topology of d_<>-open sets.
  FiniteTopology dia_top = opens_of(s.dia, OperatorKind::derivative);
  for (std::uint32_t m = 0; m < (1U << s.size()); ++m) {
    WorldSet a(m);
    WorldSet ei = s.box(s.arrow(a));
    if (s.arrow(ei) != ei) return {false, "e_[] i_-> = i_-> e_[] i_->", a, {}};
    if (topological_interior(dia_top, ei) != ei) return {false, "e_[] i_-> = i_<> e_[] i_->", a, {}};
  }
  return {};
}

struct SpaceClassification {
  bool diamond_coarse = false;
  bool diamond_regular = false;
  bool box_regular = false;
  bool extremally_disconnected = false;
  bool hereditarily_ed = false;
  /// The equation c_-> i_-> = i_-> taken as an operator identity.
  bool literal_ed_equation = false;
  bool cs4 = false;
  std::vector<LogicId> classes;
};

/// Whether the space meets the class conditions of a logic, given a classification.
inline bool in_space_class(const SpaceClassification& c, LogicId l) {
  if (is_s4_family(l) && !c.cs4) return false;
  bool ik = c.diamond_coarse && c.diamond_regular;
  switch (l) {
    case LogicId::CK4:
    case LogicId::CS4: return true;
    case LogicId::IK4:
    case LogicId::IS4: return ik;
    case LogicId::K4I:
    case LogicId::S4I: return c.box_regular && c.diamond_regular;
    case LogicId::GK4:
    case LogicId::GS4: return ik && c.hereditarily_ed;
    case LogicId::GK4c:
    case LogicId::GS4c: return ik && c.hereditarily_ed && c.box_regular;
  }
  return false;
}

/// Regularity and class predicates, each checked over every subset.
/// Throws if the space violates the polyderivative-space laws.
inline SpaceClassification space_classify(const OperatorSpace& s) {
  check_world_count(s.size(), kMaxSweepWorlds);
  if (LawReport r = space_report(s); !r) throw Error("not a polyderivative CK4-space: " + r.law + " at A=" + to_string(r.witness_a));
  const SetOperator dia_int = dualize(s.dia);
  const FiniteTopology arrow_top = opens_of(s.arrow, OperatorKind::interior);
  SpaceClassification c;
  c.diamond_coarse = c.diamond_regular = c.box_regular = c.literal_ed_equation = true;
  for (std::uint32_t m = 0; m < (1U << s.size()); ++m) {
    WorldSet a(m);
    WorldSet ia = s.arrow(a);
    if (s.arrow(dia_int(a)) != s.box(ia)) c.diamond_coarse = false;
    if (s.dia(ia) != s.arrow(s.dia(ia))) c.diamond_regular = false;
    if (dia_int(ia) != s.box(ia)) c.box_regular = false;
    if (topological_closure(arrow_top, ia) != ia) c.literal_ed_equation = false;
  }
  c.extremally_disconnected = extremally_disconnected(arrow_top);
  c.hereditarily_ed = hereditarily_extremally_disconnected(arrow_top);
  c.cs4 = law_report(s.dia, OperatorKind::closure).ok && law_report(s.box, OperatorKind::interior).ok;
  for (LogicId l : kAllLogics) {
    if (in_space_class(c, l)) c.classes.push_back(l);
  }
  return c;
}

/// F_ds: upset interior of pre, relational derivative of mod, relational integral of lead.
inline OperatorSpace frame_to_space(const BirelFrame& f) {
  const int n = f.size();
  return OperatorSpace{
      SetOperator::tabulate(n, [&](WorldSet a) { return relational_integral(f.pre(), a); }),
      SetOperator::tabulate(n, [&](WorldSet a) { return relational_derivative(f.mod(), a); }),
      SetOperator::tabulate(n, [&](WorldSet a) { return relational_integral(f.lead(), a); }),
  };
}

}  // namespace imlab
