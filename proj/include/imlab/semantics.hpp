#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "imlab/opspace.hpp"

namespace imlab {

using Valuation = std::map<std::string, WorldSet>;

/// Set-level clauses of the operator semantics over a polyderivative space.
struct SpaceAlgebra {
  const OperatorSpace& space;

  WorldSet points() const { return space.points(); }
  WorldSet impl(WorldSet a, WorldSet b) const { return space.arrow(a.complement(space.size()) | b); }
  WorldSet box(WorldSet a) const { return space.box(a); }
  WorldSet dia(WorldSet a) const { return space.arrow(space.dia(a)); }
};

/// Quantifier clauses of the birelational semantics.
struct RelationalAlgebra {
  const BirelFrame& frame;

  WorldSet points() const { return WorldSet::full(frame.size()); }

  /// w such that every pre-successor in a is in b.
  WorldSet impl(WorldSet a, WorldSet b) const {
    WorldSet out;
    for (int w = 0; w < frame.size(); ++w) {
      if ((frame.pre().successors(w) & a).subset_of(b)) out.insert(w);
    }
    return out;
  }

  /// w all of whose lead-successors are in a.
  WorldSet box(WorldSet a) const {
    WorldSet out;
    for (int w = 0; w < frame.size(); ++w) {
      if (frame.lead().successors(w).subset_of(a)) out.insert(w);
    }
    return out;
  }

  /// w such that every pre-successor v has some mod-successor in a.
  WorldSet dia(WorldSet a) const {
    WorldSet out;
    for (int w = 0; w < frame.size(); ++w) {
      bool all = true;
      frame.pre().successors(w).for_each([&](int v) { all = all && frame.mod().successors(v).intersects(a); });
      if (all) out.insert(w);
    }
    return out;
  }
};

template <class Algebra>
WorldSet evaluate(const Algebra& alg, const Valuation& val, const Formula& f) {
  switch (f.kind()) {
    case Connective::bottom: return {};
    case Connective::prop: {
      auto it = val.find(f.name());
      if (it == val.end()) throw Error("proposition " + f.name() + " missing from valuation");
      return it->second;
    }
    case Connective::conj: return evaluate(alg, val, f.lhs()) & evaluate(alg, val, f.rhs());
    case Connective::disj: return evaluate(alg, val, f.lhs()) | evaluate(alg, val, f.rhs());
    case Connective::impl: return alg.impl(evaluate(alg, val, f.lhs()), evaluate(alg, val, f.rhs()));
    case Connective::box: return alg.box(evaluate(alg, val, f.operand()));
    case Connective::diamond: return alg.dia(evaluate(alg, val, f.operand()));
  }
  return {};
}

/// Formula flattened into a post-order program over shared subformulas, with
/// propositions referenced by index.
class CompiledFormula {
public:
  explicit CompiledFormula(const Formula& f) {
    for (const std::string& p : propositions(f)) props_.push_back(p);
    std::unordered_map<Formula, int, FormulaHash> seen;
    root_ = emit(f, seen);
  }

  const std::vector<std::string>& props() const { return props_; }

  template <class Algebra>
  WorldSet eval(const Algebra& alg, std::span<const WorldSet> values) const {
    scratch_.resize(code_.size());
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      WorldSet r;
      switch (in.op) {
        case Connective::bottom: break;
        case Connective::prop: r = values[static_cast<std::size_t>(in.a)]; break;
        case Connective::conj: r = scratch_[in.a] & scratch_[in.b]; break;
        case Connective::disj: r = scratch_[in.a] | scratch_[in.b]; break;
        case Connective::impl: r = alg.impl(scratch_[in.a], scratch_[in.b]); break;
        case Connective::box: r = alg.box(scratch_[in.a]); break;
        case Connective::diamond: r = alg.dia(scratch_[in.a]); break;
      }
      scratch_[i] = r;
    }
    return scratch_[static_cast<std::size_t>(root_)];
  }

private:
  struct Instr {
    Connective op;
    int a = 0;
    int b = 0;
  };

  int emit(const Formula& f, std::unordered_map<Formula, int, FormulaHash>& seen) {
    if (auto it = seen.find(f); it != seen.end()) return it->second;
    Instr in{f.kind()};
    if (f.is_atom()) {
      if (f.is_metavariable()) throw Error("cannot evaluate schema metavariable " + f.name());
      in.a = static_cast<int>(std::lower_bound(props_.begin(), props_.end(), f.name()) - props_.begin());
    } else if (f.is_modal()) {
      in.a = emit(f.operand(), seen);
    } else if (f.is_binary()) {
      in.a = emit(f.lhs(), seen);
      in.b = emit(f.rhs(), seen);
    }
    code_.push_back(in);
    int idx = static_cast<int>(code_.size()) - 1;
    seen.emplace(f, idx);
    return idx;
  }

  std::vector<std::string> props_;
  std::vector<Instr> code_;
  int root_ = 0;
  mutable std::vector<WorldSet> scratch_;
};

// ---------------------------------------------------------------------------
// Models

struct SpaceModel {
  OperatorSpace space;
  Valuation valuation;
};

struct BirelModel {
  BirelFrame frame;
  Valuation valuation;
};

/// Description of the first proposition whose extension is not pre-upward closed.
inline std::optional<std::string> upward_closure_violation(const BirelFrame& f, const Valuation& val) {
  for (const auto& [p, ext] : val) {
    if (!ext.subset_of(WorldSet::full(f.size()))) return "val " + p + " mentions a world outside the frame";
    for (int w : ext.members()) {
      for (int v : f.pre().successors(w).members()) {
        if (!ext.contains(v)) {
          return "val " + p + " not pre-closed: " + std::to_string(w) + " in ||" + p + "||, " + std::to_string(w) +
                 " pre " + std::to_string(v) + ", " + std::to_string(v) + " not in ||" + p + "||";
        }
      }
    }
  }
  return std::nullopt;
}

inline BirelModel make_birel_model(BirelFrame f, Valuation val) {
  if (auto why = upward_closure_violation(f, val)) throw Error(*why);
  return BirelModel{std::move(f), std::move(val)};
}

inline SpaceModel make_space_model(OperatorSpace s, Valuation val) {
  for (const auto& [p, ext] : val) {
    if (s.arrow(ext) != ext) throw Error("val " + p + " = " + to_string(ext) + " is not open for i_->");
  }
  return SpaceModel{std::move(s), std::move(val)};
}

/// Operator semantics: ||.|| over a polyderivative space.
inline WorldSet extension(const OperatorSpace& s, const Valuation& val, const Formula& f) {
  return evaluate(SpaceAlgebra{s}, val, f);
}
inline WorldSet extension(const SpaceModel& m, const Formula& f) { return extension(m.space, m.valuation, f); }

/// Direct quantifier evaluation over a birelational frame.
inline WorldSet relational_extension(const BirelFrame& fr, const Valuation& val, const Formula& f) {
  return evaluate(RelationalAlgebra{fr}, val, f);
}
inline WorldSet relational_extension(const BirelModel& m, const Formula& f) {
  return relational_extension(m.frame, m.valuation, f);
}

// ---------------------------------------------------------------------------
// Validity

struct Counterexample {
  Valuation valuation;
  int world = 0;
};

struct ValidityReport {
  bool valid = true;
  std::optional<Counterexample> witness;
  std::uint64_t valuations_checked = 0;
};

/// Hard cap on valuations enumerated by one validity check.
inline constexpr std::uint64_t kMaxValuations = std::uint64_t{1} << 32;

/// Validity over every assignment of `opens` to the formula's propositions.
///
/// Valuations are visited lexicographically: propositions in name order, each
/// ranging over `opens` in ascending bitmask order, the first proposition most
/// significant. The first refuting valuation and its least world are reported.
template <class Algebra>
ValidityReport check_validity(const Algebra& alg, std::vector<WorldSet> opens, const CompiledFormula& cf) {
  std::sort(opens.begin(), opens.end());
  const std::size_t k = cf.props().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= opens.size();
    if (total > kMaxValuations) throw LimitError("too many valuations to enumerate");
  }
  std::vector<std::size_t> digits(k, 0);
  std::vector<WorldSet> values(k, opens.front());
  const WorldSet all = alg.points();
  ValidityReport report;
  while (true) {
    ++report.valuations_checked;
    WorldSet ext = cf.eval(alg, values);
    if (ext != all) {
      Counterexample cx;
      for (std::size_t i = 0; i < k; ++i) cx.valuation.emplace(cf.props()[i], values[i]);
      cx.world = (all - ext).first();
      report.valid = false;
      report.witness = std::move(cx);
      return report;
    }
    // Odometer increment, last proposition fastest.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++digits[i] < opens.size()) {
        values[i] = opens[digits[i]];
        break;
      }
      digits[i] = 0;
      values[i] = opens.front();
      if (i == 0) return report;
    }
    if (k == 0) return report;
  }
}

/// Truth in every world under every valuation by i_->-open sets.
inline ValidityReport valid_on_space(const OperatorSpace& s, const Formula& f) {
  check_world_count(s.size(), kMaxSweepWorlds);
  return check_validity(SpaceAlgebra{s}, opens_of(s.arrow, OperatorKind::interior).opens(), CompiledFormula(f));
}

/// Truth in every world under every upward-closed valuation, by the relational clauses.
inline ValidityReport valid_on_frame(const BirelFrame& fr, const Formula& f) {
  return check_validity(RelationalAlgebra{fr}, alexandroff(fr.pre()).opens(), CompiledFormula(f));
}

}  // namespace imlab
