#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "imlab/generator.hpp"
#include "imlab/semantics.hpp"

namespace imlab {

/// Exhaustive enumeration is brute force over n*n-bit masks; 4 worlds is the ceiling.
inline constexpr int kMaxEnumerationWorlds = 4;

namespace detail {

struct MaskTables {
  std::vector<std::uint64_t> preorders;
  std::vector<std::uint64_t> transitive;
};

inline const MaskTables& mask_tables(int n) {
  static const std::array<MaskTables, kMaxEnumerationWorlds + 1> tables = [] {
    std::array<MaskTables, kMaxEnumerationWorlds + 1> out;
    for (int k = 1; k <= kMaxEnumerationWorlds; ++k) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (k * k)); ++m) {
        Relation r = Relation::from_mask(k, m);
        if (!r.is_transitive()) continue;
        out[k].transitive.push_back(m);
        if (r.is_reflexive()) out[k].preorders.push_back(m);
      }
    }
    return out;
  }();
  return tables[n];
}

inline std::uint64_t permute_mask(std::uint64_t mask, int n, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((mask >> (i * n + j)) & 1U) out |= std::uint64_t{1} << (perm[i] * n + perm[j]);
    }
  }
  return out;
}

/// Whether (pre, mod) is the lexicographically least labeling of its isomorphism class.
inline bool is_canonical_labeling(std::uint64_t pre, std::uint64_t mod, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto image = std::pair{permute_mask(pre, n, perm), permute_mask(mod, n, perm)};
    if (image < std::pair{pre, mod}) return false;
  }
  return true;
}

}  // namespace detail

inline const std::vector<std::uint64_t>& preorder_masks(int n) {
  check_world_count(n, kMaxEnumerationWorlds);
  return detail::mask_tables(n).preorders;
}

inline const std::vector<std::uint64_t>& transitive_masks(int n) {
  check_world_count(n, kMaxEnumerationWorlds);
  return detail::mask_tables(n).transitive;
}

struct EnumerationOptions {
  int limit = kMaxEnumerationWorlds;
  /// Keep only the least labeling of each isomorphism class.
  bool isomorphism_reduction = false;
};

/// Visits every frame with `n` worlds in the class of `logic`, ordered by
/// (pre mask, mod mask). `visit` returns false to stop early.
template <class Visit>
std::uint64_t for_each_frame(int n, LogicId logic, Visit&& visit, EnumerationOptions opts = {}) {
  if (n < 1 || n > std::min(opts.limit, kMaxEnumerationWorlds)) {
    throw LimitError("frame enumeration limited to 1.." + std::to_string(std::min(opts.limit, kMaxEnumerationWorlds)) +
                     " worlds, got " + std::to_string(n));
  }
  std::uint64_t count = 0;
  for (std::uint64_t pm : preorder_masks(n)) {
    Relation pre = Relation::from_mask(n, pm);
    for (std::uint64_t mm : transitive_masks(n)) {
      if (opts.isomorphism_reduction && !detail::is_canonical_labeling(pm, mm, n)) continue;
      BirelFrame f(pre, Relation::from_mask(n, mm));
      if (!in_frame_class(f, logic)) continue;
      ++count;
      if (!visit(f)) return count;
    }
  }
  return count;
}

inline std::vector<BirelFrame> enumerate_frames(int n, LogicId logic, EnumerationOptions opts = {}) {
  std::vector<BirelFrame> out;
  for_each_frame(n, logic, [&](const BirelFrame& f) { out.push_back(f); return true; }, opts);
  return out;
}

// ---------------------------------------------------------------------------
// Countermodel search

struct SearchOptions {
  unsigned threads = 1;
  EnumerationOptions enumeration;
};

struct Countermodel {
  BirelModel model;
  int world = 0;
};

struct SearchResult {
  std::optional<Countermodel> countermodel;
  std::uint64_t frames_enumerated = 0;
  std::uint64_t valuations_checked = 0;
};

/// First model (frames by size then enumeration order, valuations
/// lexicographic, least world) in the class refuting `f`. Statistics count
/// work up to the witness, so they do not depend on `threads`.
inline SearchResult find_countermodel(const Formula& f, LogicId logic, int max_worlds, SearchOptions opts = {}) {
  if (max_worlds < 1 || max_worlds > std::min(opts.enumeration.limit, kMaxEnumerationWorlds)) {
    throw LimitError("countermodel search limited to " + std::to_string(opts.enumeration.limit) + " worlds");
  }
  const CompiledFormula cf(f);
  SearchResult result;
  for (int n = 1; n <= max_worlds; ++n) {
    std::vector<BirelFrame> frames = enumerate_frames(n, logic, opts.enumeration);
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<ValidityReport> reports(frames.size());
    std::atomic<std::size_t> best{none};
    auto work = [&](unsigned t, unsigned stride) {
      for (std::size_t i = t; i < frames.size(); i += stride) {
        if (i > best.load()) return;
        OperatorSpace s = frame_to_space(frames[i]);
        reports[i] = check_validity(SpaceAlgebra{s}, alexandroff(frames[i].pre()).opens(), cf);
        if (!reports[i].valid) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    };
    unsigned threads = std::max(1U, opts.threads);
    if (threads == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
      for (auto& th : pool) th.join();
    }
    std::size_t stop = best.load() == none ? frames.size() : best.load() + 1;
    result.frames_enumerated += stop;
    for (std::size_t i = 0; i < stop; ++i) result.valuations_checked += reports[i].valuations_checked;
    if (best.load() != none) {
      const ValidityReport& r = reports[best.load()];
      BirelModel m = make_birel_model(frames[best.load()], r.witness->valuation);
      int w = r.witness->world;
      if (extension(frame_to_space(m.frame), m.valuation, f).contains(w) || relational_extension(m, f).contains(w)) {
        throw Error("internal: countermodel failed re-verification");
      }
      result.countermodel = Countermodel{std::move(m), w};
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Bisimulation

/// Pairs (a, b) with a a world of the first model and b of the second.
class BisimRelation {
public:
  BisimRelation(int n1, int n2) : n2_(n2), related_(static_cast<std::size_t>(n1)) {}

  int left_size() const { return static_cast<int>(related_.size()); }
  int right_size() const { return n2_; }
  bool contains(int a, int b) const { return related_[a].contains(b); }
  WorldSet partners(int a) const { return related_[a]; }
  void insert(int a, int b) { related_[a].insert(b); }
  void erase(int a, int b) { related_[a].erase(b); }
  bool empty() const {
    return std::all_of(related_.begin(), related_.end(), [](WorldSet s) { return s.empty(); });
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < left_size(); ++a) related_[a].for_each([&](int b) { out.emplace_back(a, b); });
    return out;
  }

  friend bool operator==(const BisimRelation&, const BisimRelation&) = default;

private:
  int n2_;
  std::vector<WorldSet> related_;
};

inline bool same_atoms(const Valuation& v1, int a, const Valuation& v2, int b) {
  for (const auto& [p, ext] : v1) {
    auto it = v2.find(p);
    bool other = it != v2.end() && it->second.contains(b);
    if (ext.contains(a) != other) return false;
  }
  for (const auto& [p, ext] : v2) {
    if (!v1.count(p) && ext.contains(b)) return false;
  }
  return true;
}

namespace detail {

/// Forth and back for one relation pair, checked against `target`.
inline bool zigzag(const Relation& r1, const Relation& r2, int a, int b, const BisimRelation& target) {
  for (int a2 : r1.successors(a).members()) {
    bool ok = false;
    r2.successors(b).for_each([&](int b2) { ok = ok || target.contains(a2, b2); });
    if (!ok) return false;
  }
  for (int b2 : r2.successors(b).members()) {
    bool ok = false;
    r1.successors(a).for_each([&](int a2) { ok = ok || target.contains(a2, b2); });
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Greatest relation that respects atoms and satisfies zig-zag for both relations.
inline BisimRelation largest_bisimulation(const BirelModel& m1, const BirelModel& m2) {
  BisimRelation z(m1.frame.size(), m2.frame.size());
  for (int a = 0; a < m1.frame.size(); ++a) {
    for (int b = 0; b < m2.frame.size(); ++b) {
      if (same_atoms(m1.valuation, a, m2.valuation, b)) z.insert(a, b);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : z.pairs()) {
      if (!detail::zigzag(m1.frame.pre(), m2.frame.pre(), a, b, z) ||
          !detail::zigzag(m1.frame.mod(), m2.frame.mod(), a, b, z)) {
        z.erase(a, b);
        changed = true;
      }
    }
  }
  return z;
}

// ---------------------------------------------------------------------------
// Irreflexivization over copies {0..k-1}

enum class IndexCoupling {
  /// <w,n> pre <v,m> iff w pre v, for any copies n, m.
  free,
  /// <w,n> pre <v,m> iff w pre v and n = m.
  same_level,
};

inline int copy_world(int world, int copy, int copies) { return world * copies + copy; }

/// Worlds W x {0..k-1}; <w,n> mod <v,m> iff w mod v and n < m; valuation lifted.
inline BirelModel irreflexivize(const BirelModel& m, int copies, IndexCoupling coupling = IndexCoupling::free) {
  if (copies < 1) throw Error("irreflexivize needs at least one copy");
  const int n = m.frame.size();
  check_world_count(n * copies);
  Relation pre(n * copies);
  Relation mod(n * copies);
  for (int w = 0; w < n; ++w) {
    for (int i = 0; i < copies; ++i) {
      for (int v = 0; v < n; ++v) {
        for (int j = 0; j < copies; ++j) {
          if (m.frame.pre().contains(w, v) && (coupling == IndexCoupling::free || i == j)) {
            pre.add(copy_world(w, i, copies), copy_world(v, j, copies));
          }
          if (m.frame.mod().contains(w, v) && i < j) mod.add(copy_world(w, i, copies), copy_world(v, j, copies));
        }
      }
    }
  }
  Valuation val;
  for (const auto& [p, ext] : m.valuation) {
    WorldSet lifted;
    ext.for_each([&](int w) {
      for (int i = 0; i < copies; ++i) lifted.insert(copy_world(w, i, copies));
    });
    val.emplace(p, lifted);
  }
  return make_birel_model(BirelFrame(std::move(pre), std::move(mod)), std::move(val));
}

// ---------------------------------------------------------------------------
// Depth-bounded equivalence

struct EquivalenceOptions {
  int max_depth = 3;
  /// Accept at once when the points are bisimilar up to the requested depth.
  bool bisimulation_shortcut = true;
  std::size_t class_limit = 1U << 12;
};

struct EquivalenceVerdict {
  bool agree = true;
  /// A formula true at exactly one of the two points.
  std::optional<Formula> separating;
};

namespace detail {

/// Disjoint union of the submodels generated by the two points, restricted to `props`.
struct JointModel {
  BirelModel model;
  int left = 0;
  int right = 0;
};

inline JointModel joint_generated_model(const BirelModel& m1, int w1, const BirelModel& m2, int w2,
                                        const std::set<std::string>& props) {
  auto generated = [](const BirelModel& m, int w) {
    WorldSet reach = WorldSet::singleton(w);
    for (WorldSet prev; prev != reach;) {
      prev = reach;
      reach |= m.frame.pre().image(reach) | m.frame.mod().image(reach);
    }
    return reach.members();
  };
  std::vector<int> g1 = generated(m1, w1);
  std::vector<int> g2 = generated(m2, w2);
  const int n = static_cast<int>(g1.size() + g2.size());
  check_world_count(n);
  Relation pre(n);
  Relation mod(n);
  Valuation val;
  for (const std::string& p : props) val[p] = WorldSet{};
  auto copy_in = [&](const BirelModel& m, const std::vector<int>& g, int offset) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (m.frame.pre().contains(g[i], g[j])) pre.add(offset + static_cast<int>(i), offset + static_cast<int>(j));
        if (m.frame.mod().contains(g[i], g[j])) mod.add(offset + static_cast<int>(i), offset + static_cast<int>(j));
      }
      for (const std::string& p : props) {
        auto it = m.valuation.find(p);
        if (it != m.valuation.end() && it->second.contains(g[i])) val[p].insert(offset + static_cast<int>(i));
      }
    }
  };
  copy_in(m1, g1, 0);
  copy_in(m2, g2, static_cast<int>(g1.size()));
  int left = static_cast<int>(std::find(g1.begin(), g1.end(), w1) - g1.begin());
  int right = static_cast<int>(g1.size() + (std::find(g2.begin(), g2.end(), w2) - g2.begin()));
  return {make_birel_model(BirelFrame(std::move(pre), std::move(mod)), std::move(val)), left, right};
}

/// Z_d on one model: atoms and pre zig-zag within Z_d, mod and lead zig-zag into Z_{d-1}.
inline BisimRelation bounded_bisimulation(const BirelModel& m, int depth) {
  const int n = m.frame.size();
  BisimRelation prev(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (same_atoms(m.valuation, a, m.valuation, b)) prev.insert(a, b);
    }
  }
  BisimRelation cur = prev;
  for (int d = 0; d <= depth; ++d) {
    cur = prev;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [a, b] : cur.pairs()) {
        bool ok = zigzag(m.frame.pre(), m.frame.pre(), a, b, cur);
        if (ok && d > 0) {
          ok = zigzag(m.frame.mod(), m.frame.mod(), a, b, prev) && zigzag(m.frame.lead(), m.frame.lead(), a, b, prev);
        }
        if (!ok) {
          cur.erase(a, b);
          changed = true;
        }
      }
    }
    prev = cur;
  }
  return cur;
}

}  // namespace detail

/// Whether (m1, w1) and (m2, w2) satisfy the same formulas over `props` of modal
/// depth <= `depth`.
///
/// The verdict comes from the canonical formula enumeration over the joint
/// generated model. Bounded bisimilarity of the two points implies agreement,
/// so it is used to skip the enumeration when the option allows.
inline EquivalenceVerdict depth_bounded_equivalence(const BirelModel& m1, int w1, const BirelModel& m2, int w2,
                                                    int depth, const std::set<std::string>& props,
                                                    EquivalenceOptions opts = {}) {
  if (depth < 0 || depth > opts.max_depth) {
    throw LimitError("depth " + std::to_string(depth) + " exceeds bound " + std::to_string(opts.max_depth));
  }
  detail::JointModel joint = detail::joint_generated_model(m1, w1, m2, w2, props);
  if (opts.bisimulation_shortcut && detail::bounded_bisimulation(joint.model, depth).contains(joint.left, joint.right)) {
    return {};
  }
  RelationalAlgebra alg{joint.model.frame};
  std::vector<std::pair<std::string, WorldSet>> atoms(joint.model.valuation.begin(), joint.model.valuation.end());
  auto separates = [&](const Representative<WorldSet>& r) {
    return r.value.contains(joint.left) != r.value.contains(joint.right);
  };
  auto reps = canonical_formulas(ExtensionKey<RelationalAlgebra>{alg}, atoms, depth, opts.class_limit, separates);
  if (!reps.empty() && separates(reps.back())) return {false, reps.back().formula};
  return {};
}

}  // namespace imlab
