#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "imlab/world_set.hpp"

namespace imlab {

/// Binary relation on {0..n-1}, stored as one successor set per world.
class Relation {
public:
  explicit Relation(int n) : n_(n), succ_(static_cast<std::size_t>(n)) { check_world_count(n); }

  Relation(int n, const std::vector<std::pair<int, int>>& pairs) : Relation(n) {
    for (auto [a, b] : pairs) add(a, b);
  }

  static Relation identity(int n) {
    Relation r(n);
    for (int w = 0; w < n; ++w) r.add(w, w);
    return r;
  }

  /// Bit i*n+j of `mask` encodes the pair (i, j); requires n*n <= 64.
  static Relation from_mask(int n, std::uint64_t mask) {
    Relation r(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((mask >> (i * n + j)) & 1U) r.add(i, j);
      }
    }
    return r;
  }

  std::uint64_t to_mask() const {
    if (n_ > 8) throw LimitError("relation mask needs n <= 8");
    std::uint64_t mask = 0;
    for (int i = 0; i < n_; ++i) {
      succ_[i].for_each([&](int j) { mask |= std::uint64_t{1} << (i * n_ + j); });
    }
    return mask;
  }

  int size() const { return n_; }

  void add(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
      throw Error("pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for " + std::to_string(n_) + " worlds");
    }
    succ_[a].insert(b);
  }

  bool contains(int a, int b) const { return succ_[a].contains(b); }
  WorldSet successors(int w) const { return succ_[w]; }

  /// Upward image of a set of worlds.
  WorldSet image(WorldSet a) const {
    WorldSet out;
    a.for_each([&](int w) { out |= succ_[w]; });
    return out;
  }

  /// R^{-1}A, the worlds with some successor in A.
  WorldSet preimage(WorldSet a) const {
    WorldSet out;
    for (int w = 0; w < n_; ++w) {
      if (succ_[w].intersects(a)) out.insert(w);
    }
    return out;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) succ_[i].for_each([&](int j) { out.emplace_back(i, j); });
    return out;
  }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (WorldSet s : succ_) c += static_cast<std::size_t>(s.size());
    return c;
  }

  bool empty() const { return pair_count() == 0; }

  bool is_reflexive() const {
    for (int w = 0; w < n_; ++w) {
      if (!contains(w, w)) return false;
    }
    return true;
  }

  bool is_irreflexive() const {
    for (int w = 0; w < n_; ++w) {
      if (contains(w, w)) return false;
    }
    return true;
  }

  bool is_transitive() const {
    for (int w = 0; w < n_; ++w) {
      if (!image(succ_[w]).subset_of(succ_[w])) return false;
    }
    return true;
  }

  bool is_preorder() const { return is_reflexive() && is_transitive(); }

  Relation converse() const {
    Relation r(n_);
    for (auto [a, b] : pairs()) r.add(b, a);
    return r;
  }

  Relation operator|(const Relation& o) const {
    Relation r = *this;
    for (int w = 0; w < n_; ++w) r.succ_[w] |= o.succ_[w];
    return r;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

private:
  int n_;
  std::vector<WorldSet> succ_;
};

inline void require_same_size(const Relation& r, const Relation& s) {
  if (r.size() != s.size()) {
    throw Error("arity mismatch: " + std::to_string(r.size()) + " vs " + std::to_string(s.size()) + " worlds");
  }
}

/// a (R;S) c iff a R b S c for some b.
inline Relation compose(const Relation& r, const Relation& s) {
  require_same_size(r, s);
  Relation out(r.size());
  for (int a = 0; a < r.size(); ++a) {
    s.image(r.successors(a)).for_each([&](int c) { out.add(a, c); });
  }
  return out;
}

enum class ClosureKind { transitive, reflexive_transitive };

inline Relation closure(const Relation& r, ClosureKind kind) {
  Relation out = kind == ClosureKind::reflexive_transitive ? (r | Relation::identity(r.size())) : r;
  // Warshall over successor sets.
  for (int k = 0; k < out.size(); ++k) {
    for (int i = 0; i < out.size(); ++i) {
      if (out.contains(i, k)) {
        out.successors(k).for_each([&](int j) { out.add(i, j); });
      }
    }
  }
  return out;
}

inline Relation transitive_closure(const Relation& r) { return closure(r, ClosureKind::transitive); }
inline Relation reflexive_transitive_closure(const Relation& r) { return closure(r, ClosureKind::reflexive_transitive); }

/// d_R(A) = R^{-1}A.
inline WorldSet relational_derivative(const Relation& r, WorldSet a) { return r.preimage(a); }

/// e_R(A) = X \ d_R(X \ A): worlds all of whose successors lie in A.
inline WorldSet relational_integral(const Relation& r, WorldSet a) {
  int n = r.size();
  return relational_derivative(r, a.complement(n)).complement(n);
}

inline std::string to_string(const Relation& r) {
  std::string out = "{";
  bool first = true;
  for (auto [a, b] : r.pairs()) {
    if (!first) out += ",";
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    first = false;
  }
  return out + "}";
}

}  // namespace imlab
