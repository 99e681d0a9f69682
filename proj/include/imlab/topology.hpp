#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "imlab/relation.hpp"

namespace imlab {

/// Cap for exhaustive 2^n sweeps over subsets.
inline constexpr int kMaxSweepWorlds = 16;

struct TopologyVerdict {
  bool ok = true;
  std::string reason;
  /// The offending pair of opens, when the failure is a union/intersection.
  std::optional<std::pair<WorldSet, WorldSet>> witness;
};

/// Accepts iff `family` contains the empty set and X and is closed under binary union and intersection.
inline TopologyVerdict validate_topology(const std::vector<WorldSet>& family, int n) {
  check_world_count(n, kMaxSweepWorlds);
  WorldSet all = WorldSet::full(n);
  std::vector<WorldSet> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  for (WorldSet u : sorted) {
    if (!u.subset_of(all)) return {false, "open set " + to_string(u) + " out of range", std::nullopt};
  }
  auto has = [&](WorldSet u) { return std::binary_search(sorted.begin(), sorted.end(), u); };
  if (!has(WorldSet{})) return {false, "empty set missing", std::nullopt};
  if (!has(all)) return {false, "whole space " + to_string(all) + " missing", std::nullopt};
  for (WorldSet u : sorted) {
    for (WorldSet v : sorted) {
      if (!has(u | v)) return {false, "union " + to_string(u | v) + " missing", std::pair{u, v}};
      if (!has(u & v)) return {false, "intersection " + to_string(u & v) + " missing", std::pair{u, v}};
    }
  }
  return {};
}

/// A topology on {0..n-1} given by its open sets; every finite topology is Alexandroff.
class FiniteTopology {
public:
  FiniteTopology(int n, std::vector<WorldSet> opens) : n_(n), opens_(std::move(opens)) {
    TopologyVerdict v = validate_topology(opens_, n_);
    if (!v.ok) throw Error("not a topology: " + v.reason);
    std::sort(opens_.begin(), opens_.end());
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    nbhd_.assign(static_cast<std::size_t>(n_), WorldSet::full(n_));
    for (WorldSet u : opens_) {
      u.for_each([&](int x) { nbhd_[x] &= u; });
    }
  }

  static FiniteTopology discrete(int n) {
    std::vector<WorldSet> all;
    for (std::uint32_t m = 0; m < (1U << n); ++m) all.emplace_back(m);
    return FiniteTopology(n, std::move(all));
  }

  static FiniteTopology indiscrete(int n) { return FiniteTopology(n, {WorldSet{}, WorldSet::full(n)}); }

  int size() const { return n_; }
  const std::vector<WorldSet>& opens() const& { return opens_; }
  std::vector<WorldSet> opens() && { return std::move(opens_); }
  WorldSet points() const { return WorldSet::full(n_); }
  bool is_open(WorldSet a) const { return std::binary_search(opens_.begin(), opens_.end(), a); }
  /// Least open set containing x.
  WorldSet neighbourhood(int x) const { return nbhd_[x]; }

  /// Specialization preorder: x <= y iff y lies in every open containing x.
  Relation specialization() const {
    Relation r(n_);
    for (int x = 0; x < n_; ++x) nbhd_[x].for_each([&](int y) { r.add(x, y); });
    return r;
  }

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

private:
  int n_;
  std::vector<WorldSet> opens_;
  std::vector<WorldSet> nbhd_;
};

/// tau_R: the sets U with R[U] contained in U.
inline FiniteTopology alexandroff(const Relation& r) {
  int n = r.size();
  check_world_count(n, kMaxSweepWorlds);
  std::vector<WorldSet> opens;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    WorldSet u(m);
    if (r.image(u).subset_of(u)) opens.push_back(u);
  }
  return FiniteTopology(n, std::move(opens));
}

inline FiniteTopology meet(const FiniteTopology& a, const FiniteTopology& b) {
  if (a.size() != b.size()) throw Error("arity mismatch in topology meet");
  std::vector<WorldSet> both;
  std::set_intersection(a.opens().begin(), a.opens().end(), b.opens().begin(), b.opens().end(),
                        std::back_inserter(both));
  return FiniteTopology(a.size(), std::move(both));
}

// Cantor derivative and friends, via least neighbourhoods.

inline WorldSet cantor_derivative(const FiniteTopology& t, WorldSet a) {
  WorldSet out;
  for (int x = 0; x < t.size(); ++x) {
    if ((t.neighbourhood(x) & a).intersects(WorldSet::full(t.size()) - WorldSet::singleton(x))) out.insert(x);
  }
  return out;
}

inline WorldSet topological_closure(const FiniteTopology& t, WorldSet a) { return a | cantor_derivative(t, a); }

inline WorldSet topological_interior(const FiniteTopology& t, WorldSet a) {
  return topological_closure(t, a.complement(t.size())).complement(t.size());
}

inline WorldSet cantor_integral(const FiniteTopology& t, WorldSet a) {
  return cantor_derivative(t, a.complement(t.size())).complement(t.size());
}

/// Subspace check: does every subset of `space` contain an isolated point?
inline std::optional<WorldSet> non_scattered_witness(const FiniteTopology& t) {
  for (std::uint32_t m = 1; m < (1U << t.size()); ++m) {
    WorldSet y(m);
    bool isolated = false;
    y.for_each([&](int x) { isolated = isolated || (t.neighbourhood(x) & y) == WorldSet::singleton(x); });
    if (!isolated) return y;
  }
  return std::nullopt;
}

/// Closure of every open set is open.
inline bool extremally_disconnected(const FiniteTopology& t) {
  return std::all_of(t.opens().begin(), t.opens().end(),
                     [&](WorldSet u) { return t.is_open(topological_closure(t, u)); });
}

/// ED restricted to the subspace on `y`.
inline bool subspace_extremally_disconnected(const FiniteTopology& t, WorldSet y) {
  std::vector<WorldSet> rel;
  for (WorldSet u : t.opens()) rel.push_back(u & y);
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  for (WorldSet v : rel) {
    WorldSet cl = topological_closure(t, v) & y;
    if (!std::binary_search(rel.begin(), rel.end(), cl)) return false;
  }
  return true;
}

inline std::optional<WorldSet> non_hed_witness(const FiniteTopology& t) {
  for (std::uint32_t m = 1; m < (1U << t.size()); ++m) {
    if (!subspace_extremally_disconnected(t, WorldSet(m))) return WorldSet(m);
  }
  return std::nullopt;
}

inline bool hereditarily_extremally_disconnected(const FiniteTopology& t) { return !non_hed_witness(t); }

/// A set A with dd(A) not contained in d(A), if any.
inline std::optional<WorldSet> non_td_witness(const FiniteTopology& t) {
  for (std::uint32_t m = 0; m < (1U << t.size()); ++m) {
    WorldSet d = cantor_derivative(t, WorldSet(m));
    if (!cantor_derivative(t, d).subset_of(d)) return WorldSet(m);
  }
  return std::nullopt;
}

inline bool is_td(const FiniteTopology& t) { return !non_td_witness(t); }

struct TopologyProperties {
  bool td = false;
  bool extremally_disconnected = false;
  bool hereditarily_ed = false;
  bool scattered = false;
  std::optional<WorldSet> td_witness;
};

inline TopologyProperties topo_properties(const FiniteTopology& t) {
  check_world_count(t.size(), kMaxSweepWorlds);
  TopologyProperties p;
  p.td_witness = non_td_witness(t);
  p.td = !p.td_witness;
  p.extremally_disconnected = extremally_disconnected(t);
  p.hereditarily_ed = hereditarily_extremally_disconnected(t);
  p.scattered = !non_scattered_witness(t);
  return p;
}

/// Every topology on n labeled points, by brute force over open-set families.
inline std::vector<FiniteTopology> enumerate_topologies(int n) {
  if (n < 1 || n > 4) throw LimitError("exhaustive topology enumeration supports 1..4 points");
  const int subsets = 1 << n;
  const std::uint32_t full = (1U << n) - 1;
  std::vector<FiniteTopology> out;
  // Families always contain the empty set and X, so only the middle subsets vary.
  const int middle = subsets - 2;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << middle); ++fam) {
    std::vector<WorldSet> opens = {WorldSet{}, WorldSet(full)};
    for (int i = 0; i < middle; ++i) {
      if ((fam >> i) & 1U) opens.emplace_back(static_cast<std::uint32_t>(i + 1));
    }
    if (validate_topology(opens, n).ok) out.emplace_back(n, std::move(opens));
  }
  return out;
}

}  // namespace imlab
