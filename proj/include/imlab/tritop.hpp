#pragma once

#include "imlab/opspace.hpp"

namespace imlab {

/// Three topologies on one point set: implication, diamond, box.
struct TriTopSpace {
  FiniteTopology arrow;
  FiniteTopology dia;
  FiniteTopology box;

  TriTopSpace(FiniteTopology a, FiniteTopology d, FiniteTopology b)
      : arrow(std::move(a)), dia(std::move(d)), box(std::move(b)) {
    if (arrow.size() != dia.size() || arrow.size() != box.size()) throw Error("arity mismatch in tritopological space");
  }

  int size() const { return arrow.size(); }
};

/// The space with tau_[] the meet of the other two.
inline TriTopSpace bitop_to_tritop(const FiniteTopology& arrow, const FiniteTopology& dia) {
  if (arrow.size() != dia.size()) throw Error("arity mismatch in bitopological space");
  return TriTopSpace(arrow, dia, meet(arrow, dia));
}

/// F_top: the Alexandroff topologies of pre, mod and lead.
inline TriTopSpace frame_to_tritop(const BirelFrame& f) {
  return TriTopSpace(alexandroff(f.pre()), alexandroff(f.mod()), alexandroff(f.lead()));
}

enum class InducedKind { closure, derivative };

class PreconditionError : public Error {
public:
  PreconditionError(const std::string& what, WorldSet witness) : Error(what), witness_(witness) {}
  WorldSet witness() const { return witness_; }

private:
  WorldSet witness_;
};

/// Closure kind: (i_->, c_<>, i_[]). Derivative kind: (i_->, d_<>, e_[]) with Cantor
/// derivative and integral, which requires tau_<> and tau_[] to be T_d.
inline OperatorSpace induce(const TriTopSpace& x, InducedKind kind) {
  const int n = x.size();
  auto interior = [](const FiniteTopology& t) {
    return SetOperator::tabulate(t.size(), [&](WorldSet a) { return topological_interior(t, a); });
  };
  if (kind == InducedKind::closure) {
    return OperatorSpace{interior(x.arrow),
                         SetOperator::tabulate(n, [&](WorldSet a) { return topological_closure(x.dia, a); }),
                         interior(x.box)};
  }
  if (auto w = non_td_witness(x.dia)) throw PreconditionError("tau_<> is not T_d: dd(A) not within d(A) at A=" + to_string(*w), *w);
  if (auto w = non_td_witness(x.box)) throw PreconditionError("tau_[] is not T_d: dd(A) not within d(A) at A=" + to_string(*w), *w);
  return OperatorSpace{interior(x.arrow),
                       SetOperator::tabulate(n, [&](WorldSet a) { return cantor_derivative(x.dia, a); }),
                       SetOperator::tabulate(n, [&](WorldSet a) { return cantor_integral(x.box, a); })};
}

}  // namespace imlab
