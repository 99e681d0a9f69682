#pragma once

#include "imlab/imlab.hpp"

namespace fixtures {

using namespace imlab;

// 0 pre 1; 0 and 1 see 2.
inline BirelFrame l62() { return BirelFrame::from_generators(3, {{0, 1}}, {{0, 2}, {1, 2}}); }
// 1 pre 2; 0 sees 1.
inline BirelFrame f2() { return BirelFrame::from_generators(3, {{1, 2}}, {{0, 1}}); }
// One reflexive world.
inline BirelFrame l1() { return BirelFrame::from_generators(1, {}, {{0, 0}}); }
inline BirelFrame fork_frame() { return BirelFrame::from_generators(3, {{0, 1}, {0, 2}}, {}); }

inline BirelModel l62_model() { return make_birel_model(l62(), {{"p", {1}}, {"q", {2}}}); }
inline BirelModel f2_model() { return make_birel_model(f2(), {{"p", {2}}, {"q", {}}}); }
inline BirelModel l1_model() { return make_birel_model(l1(), {{"p", {}}}); }

inline Relation rel(int n, std::vector<std::pair<int, int>> pairs) { return Relation(n, pairs); }

/// Every frame with at most `max_n` worlds, any class.
template <class F>
void for_each_small_frame(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n) for_each_frame(n, LogicId::CK4, [&](const BirelFrame& fr) { f(fr); return true; });
}

}  // namespace fixtures
