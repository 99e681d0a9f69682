#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "imlab/semantics.hpp"

namespace imlab {

/// One formula per semantic class, with its value and modal depth.
template <class Value>
struct Representative {
  Formula formula;
  Value value;
  int depth = 0;
};

/// Wraps a set-level algebra so that values are plain extensions.
template <class Algebra>
struct ExtensionKey {
  using Value = WorldSet;
  const Algebra& alg;

  Value bottom() const { return {}; }
  Value conj(Value a, Value b) const { return a & b; }
  Value disj(Value a, Value b) const { return a | b; }
  Value impl(Value a, Value b) const { return alg.impl(a, b); }
  Value box(Value a) const { return alg.box(a); }
  Value dia(Value a) const { return alg.dia(a); }
};

/// Evaluates two algebras side by side; classes are pairs of extensions.
template <class A, class B>
struct PairedKey {
  using Value = std::pair<WorldSet, WorldSet>;
  const A& a;
  const B& b;

  Value bottom() const { return {}; }
  Value conj(Value x, Value y) const { return {x.first & y.first, x.second & y.second}; }
  Value disj(Value x, Value y) const { return {x.first | y.first, x.second | y.second}; }
  Value impl(Value x, Value y) const { return {a.impl(x.first, y.first), b.impl(x.second, y.second)}; }
  Value box(Value x) const { return {a.box(x.first), b.box(x.second)}; }
  Value dia(Value x) const { return {a.dia(x.first), b.dia(x.second)}; }
};

/// Enumerates formulas over `atoms` of modal depth <= `depth`, keeping one
/// representative per value of `key`. If `stop` returns true for a new
/// representative, enumeration ends and the list so far is returned.
///
/// Level 0 closes {false, atoms} under &, |, ->; each further level adds [] and
/// <> of every class found so far and closes again. Commutative connectives are
/// built only with the earlier class on the left. Since every clause is
/// compositional in the key, each formula of the fragment has the value of some
/// returned representative.
template <class Key, class Stop = bool (*)(const Representative<typename Key::Value>&)>
std::vector<Representative<typename Key::Value>> canonical_formulas(
    const Key& key, const std::vector<std::pair<std::string, typename Key::Value>>& atoms, int depth,
    std::size_t limit = 1U << 14, Stop stop = [](const Representative<typename Key::Value>&) { return false; }) {
  using Value = typename Key::Value;
  std::vector<Representative<Value>> reps;
  std::map<Value, std::size_t> index;
  struct Stopped {};
  auto add = [&](Formula f, Value v, int d) {
    if (index.count(v)) return;
    if (reps.size() >= limit) throw LimitError("canonical formula enumeration exceeded " + std::to_string(limit) + " classes");
    index.emplace(v, reps.size());
    reps.push_back({std::move(f), v, d});
    if (stop(reps.back())) throw Stopped{};
  };
  std::size_t processed = 0;
  auto close = [&]() {
    while (processed < reps.size()) {
      std::size_t i = processed++;
      for (std::size_t j = 0; j <= i; ++j) {
        // Copies: `add` may reallocate `reps`.
        Representative<Value> x = reps[j];
        Representative<Value> y = reps[i];
        int d = std::max(x.depth, y.depth);
        add(Formula::conj(x.formula, y.formula), key.conj(x.value, y.value), d);
        add(Formula::disj(x.formula, y.formula), key.disj(x.value, y.value), d);
        add(Formula::impl(x.formula, y.formula), key.impl(x.value, y.value), d);
        add(Formula::impl(y.formula, x.formula), key.impl(y.value, x.value), d);
      }
    }
  };
  try {
    add(Formula::bottom(), key.bottom(), 0);
    for (const auto& [name, v] : atoms) add(Formula::prop(name), v, 0);
    close();
    for (int level = 1; level <= depth; ++level) {
      std::size_t existing = reps.size();
      for (std::size_t i = 0; i < existing; ++i) {
        Representative<Value> x = reps[i];
        add(Formula::box(x.formula), key.box(x.value), level);
        add(Formula::diamond(x.formula), key.dia(x.value), level);
      }
      close();
    }
  } catch (const Stopped&) {
  }
  return reps;
}

}  // namespace imlab
