#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "imlab/formula.hpp"

namespace imlab {

enum class LogicId { CK4, IK4, K4I, GK4, GK4c, CS4, IS4, S4I, GS4, GS4c };

inline constexpr std::array<LogicId, 10> kAllLogics = {LogicId::CK4, LogicId::IK4, LogicId::K4I, LogicId::GK4,
                                                       LogicId::GK4c, LogicId::CS4, LogicId::IS4, LogicId::S4I,
                                                       LogicId::GS4, LogicId::GS4c};

inline std::string_view logic_name(LogicId l) {
  switch (l) {
    case LogicId::CK4: return "CK4";
    case LogicId::IK4: return "IK4";
    case LogicId::K4I: return "K4I";
    case LogicId::GK4: return "GK4";
    case LogicId::GK4c: return "GK4c";
    case LogicId::CS4: return "CS4";
    case LogicId::IS4: return "IS4";
    case LogicId::S4I: return "S4I";
    case LogicId::GS4: return "GS4";
    case LogicId::GS4c: return "GS4c";
  }
  return "?";
}

inline LogicId parse_logic(std::string_view name) {
  for (LogicId l : kAllLogics) {
    if (logic_name(l) == name) return l;
  }
  throw Error("unknown logic '" + std::string(name) + "'");
}

/// The S4 variants (reflexive modal relation / closure-interior operators).
inline bool is_s4_family(LogicId l) { return static_cast<int>(l) >= static_cast<int>(LogicId::CS4); }

/// A named axiom schema. Metavariables are uppercase atoms.
struct Schema {
  std::string name;
  Formula pattern;
};

/// The fixed schema catalog, in matching priority order.
inline const std::vector<Schema>& schema_catalog() {
  static const std::vector<Schema> catalog = [] {
    std::vector<std::pair<std::string, std::string>> src = {
        // Intuitionistic propositional base.
        {"A1", "A -> (B -> A)"},
        {"A2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"},
        {"AndI", "A -> (B -> A & B)"},
        {"AndE1", "A & B -> A"},
        {"AndE2", "A & B -> B"},
        {"OrI1", "A -> A | B"},
        {"OrI2", "B -> A | B"},
        {"OrE", "(A -> C) -> ((B -> C) -> (A | B -> C))"},
        {"EFQ", "false -> A"},
        // CK4 modal base.
        {"Kbox", "[](A -> B) -> ([]A -> []B)"},
        {"Kdia", "[](A -> B) -> (<>A -> <>B)"},
        {"4box", "[]A -> [][]A"},
        {"4dia", "<><>A -> <>A"},
        {"N", "!<>false"},
        // Extensions.
        {"Tbox", "[]A -> A"},
        {"Tdia", "A -> <>A"},
        {"FS", "(<>A -> []B) -> [](A -> B)"},
        {"DP", "<>(A | B) -> <>A | <>B"},
        {"RV", "[](A | B) -> []A | <>B"},
        {"GD", "(A -> B) | (B -> A)"},
    };
    std::vector<Schema> out;
    for (auto& [name, text] : src) out.push_back({name, parse(text)});
    return out;
  }();
  return catalog;
}

inline const Schema& find_schema(std::string_view name) {
  for (const Schema& s : schema_catalog()) {
    if (s.name == name) return s;
  }
  throw Error("unknown schema '" + std::string(name) + "'");
}

struct SignatureOptions {
  /// Whether CK4's base contains N. Default follows the logics as defined.
  bool include_n = true;
};

/// Schema names of a logic, in catalog order.
inline std::vector<std::string> signature_names(LogicId l, SignatureOptions opts = {}) {
  std::vector<std::string> names = {"A1", "A2", "AndI", "AndE1", "AndE2", "OrI1", "OrI2", "OrE", "EFQ",
                                    "Kbox", "Kdia", "4box", "4dia"};
  if (opts.include_n) names.push_back("N");
  auto add = [&](std::initializer_list<const char*> extra) {
    for (const char* n : extra) names.emplace_back(n);
  };
  if (is_s4_family(l)) add({"Tbox", "Tdia"});
  switch (l) {
    case LogicId::CK4:
    case LogicId::CS4: break;
    case LogicId::IK4:
    case LogicId::IS4: add({"FS", "DP"}); break;
    case LogicId::K4I:
    case LogicId::S4I: add({"DP", "RV"}); break;
    case LogicId::GK4:
    case LogicId::GS4: add({"FS", "DP", "GD"}); break;
    case LogicId::GK4c:
    case LogicId::GS4c: add({"FS", "DP", "RV", "GD"}); break;
  }
  // Keep catalog order so first-match is deterministic.
  std::vector<std::string> ordered;
  for (const Schema& s : schema_catalog()) {
    if (std::find(names.begin(), names.end(), s.name) != names.end()) ordered.push_back(s.name);
  }
  return ordered;
}

inline std::vector<Schema> logic_signature(LogicId l, SignatureOptions opts = {}) {
  std::vector<Schema> out;
  for (const std::string& n : signature_names(l, opts)) out.push_back(find_schema(n));
  return out;
}

/// DP belongs to the logic.
inline bool is_diamond_regular(LogicId l) {
  auto names = signature_names(l);
  return std::find(names.begin(), names.end(), "DP") != names.end();
}

// ---------------------------------------------------------------------------
// Schema matching

/// Extends `binding` so that instantiate(pattern, binding) == f, or returns false.
inline bool match_schema(const Formula& pattern, const Formula& f, Binding& binding) {
  if (pattern.is_metavariable()) {
    auto [it, inserted] = binding.try_emplace(pattern.name(), f);
    return inserted || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  switch (pattern.kind()) {
    case Connective::bottom: return true;
    case Connective::prop: return pattern.name() == f.name();
    case Connective::box:
    case Connective::diamond: return match_schema(pattern.operand(), f.operand(), binding);
    default: return match_schema(pattern.lhs(), f.lhs(), binding) && match_schema(pattern.rhs(), f.rhs(), binding);
  }
}

struct AxiomMatch {
  std::string schema;
  Binding binding;
};

/// First schema of the logic (catalog order) that f instantiates.
inline std::optional<AxiomMatch> is_axiom_instance(const Formula& f, LogicId l, SignatureOptions opts = {}) {
  for (const Schema& s : logic_signature(l, opts)) {
    Binding b;
    if (match_schema(s.pattern, f, b)) return AxiomMatch{s.name, std::move(b)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Derivations

struct AxiomStep {
  std::string schema;
  /// Empty binding asks the checker to infer one by matching.
  Binding binding;
};
struct ModusPonens {
  std::size_t minor;  // index of phi
  std::size_t major;  // index of phi -> psi
};
struct Necessitation {
  std::size_t premise;
};
using Justification = std::variant<AxiomStep, ModusPonens, Necessitation>;

struct DerivationStep {
  Formula formula;
  Justification justification;
};

using Derivation = std::vector<DerivationStep>;

struct CheckVerdict {
  bool accepted = true;
  std::optional<std::size_t> failed_step;
  std::string reason;

  static CheckVerdict ok() { return {}; }
  static CheckVerdict reject(std::optional<std::size_t> step, std::string why) { return {false, step, std::move(why)}; }
};

namespace detail {

inline std::optional<std::string> check_step(const Derivation& d, std::size_t i, LogicId l, SignatureOptions opts) {
  const DerivationStep& step = d[i];
  auto earlier = [&](std::size_t j) -> std::optional<std::string> {
    if (j >= i) return "bad index " + std::to_string(j) + " (must refer to an earlier step)";
    return std::nullopt;
  };
  if (const auto* ax = std::get_if<AxiomStep>(&step.justification)) {
    auto names = signature_names(l, opts);
    if (std::find(names.begin(), names.end(), ax->schema) == names.end()) {
      return "schema " + ax->schema + " is not an axiom of " + std::string(logic_name(l));
    }
    const Schema& s = find_schema(ax->schema);
    if (ax->binding.empty() && !metavariables(s.pattern).empty()) {
      Binding b;
      if (!match_schema(s.pattern, step.formula, b)) return "not an axiom instance of " + ax->schema;
      return std::nullopt;
    }
    for (const std::string& mv : metavariables(s.pattern)) {
      if (!ax->binding.count(mv)) return "unbound metavariable " + mv;
    }
    if (!(instantiate(s.pattern, ax->binding) == step.formula)) return "justification mismatch: binding does not produce the formula";
    return std::nullopt;
  }
  if (const auto* mp = std::get_if<ModusPonens>(&step.justification)) {
    if (auto e = earlier(mp->minor)) return e;
    if (auto e = earlier(mp->major)) return e;
    const Formula& major = d[mp->major].formula;
    if (major.kind() != Connective::impl) return "justification mismatch: major premise is not an implication";
    if (!(major.lhs() == d[mp->minor].formula)) return "justification mismatch: antecedent differs from minor premise";
    if (!(major.rhs() == step.formula)) return "justification mismatch: consequent differs from the step";
    return std::nullopt;
  }
  const auto& nec = std::get<Necessitation>(step.justification);
  if (auto e = earlier(nec.premise)) return e;
  if (!(Formula::box(d[nec.premise].formula) == step.formula)) return "justification mismatch: step is not the box of its premise";
  return std::nullopt;
}

}  // namespace detail

/// Accepts iff every step is an axiom instance of the logic or follows by MP/Nec.
inline CheckVerdict check_derivation(const Derivation& d, LogicId l, SignatureOptions opts = {}) {
  if (d.empty()) return CheckVerdict::reject(std::nullopt, "empty derivation");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (auto why = detail::check_step(d, i, l, opts)) return CheckVerdict::reject(i, *why);
  }
  return CheckVerdict::ok();
}

struct EntailmentCertificate {
  std::vector<Formula> premises;
  Formula conclusion;
  Derivation derivation;
};

/// The formula a certificate must derive: (p0 & ... & pn) -> c, or c alone without premises.
inline Formula entailment_target(const std::vector<Formula>& premises, const Formula& conclusion) {
  if (premises.empty()) return conclusion;
  return Formula::impl(conjoin(premises), conclusion);
}

inline CheckVerdict check_entailment(const EntailmentCertificate& c, LogicId l, SignatureOptions opts = {}) {
  CheckVerdict v = check_derivation(c.derivation, l, opts);
  if (!v.accepted) return v;
  if (!(c.derivation.back().formula == entailment_target(c.premises, c.conclusion))) {
    return CheckVerdict::reject(c.derivation.size() - 1, "conclusion mismatch: derivation ends in " +
                                                             render(c.derivation.back().formula) + ", expected " +
                                                             render(entailment_target(c.premises, c.conclusion)));
  }
  return CheckVerdict::ok();
}

// ---------------------------------------------------------------------------
// Derivation file format:
//   <formula> ; axiom <schema> [X=<formula>, Y=<formula>]
//   <formula> ; mp <i> <j>
//   <formula> ; nec <i>
// Indices are zero-based; '#' starts a comment.

inline Derivation parse_derivation(std::string_view text) {
  Derivation out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error("derivation line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto semi = line.find(';');
    if (semi == std::string::npos) throw fail("missing ';' justification");
    Formula f = [&] {
      try {
        return parse(line.substr(0, semi));
      } catch (const ParseError& e) {
        throw fail(e.what());
      }
    }();
    std::istringstream just(line.substr(semi + 1));
    std::string rule;
    just >> rule;
    if (rule == "axiom") {
      AxiomStep ax;
      if (!(just >> ax.schema)) throw fail("axiom needs a schema name");
      std::string rest;
      std::getline(just, rest);
      std::size_t start = 0;
      while (rest.find_first_not_of(" \t\r", start) != std::string::npos) {
        std::size_t comma = rest.find(',', start);
        std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto eq = item.find('=');
        if (eq == std::string::npos) throw fail("binding '" + item + "' lacks '='");
        std::string var = item.substr(0, eq);
        var.erase(0, var.find_first_not_of(" \t"));
        var.erase(var.find_last_not_of(" \t") + 1);
        if (var.empty() || !std::isupper(static_cast<unsigned char>(var[0]))) throw fail("bad metavariable '" + var + "'");
        try {
          ax.binding.insert_or_assign(var, parse(item.substr(eq + 1)));
        } catch (const ParseError& e) {
          throw fail(e.what());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      out.push_back({f, ax});
    } else if (rule == "mp") {
      long i = -1, j = -1;
      if (!(just >> i >> j) || i < 0 || j < 0) throw fail("mp needs two indices");
      out.push_back({f, ModusPonens{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}});
    } else if (rule == "nec") {
      long i = -1;
      if (!(just >> i) || i < 0) throw fail("nec needs one index");
      out.push_back({f, Necessitation{static_cast<std::size_t>(i)}});
    } else {
      throw fail("unknown rule '" + rule + "'");
    }
  }
  return out;
}

inline std::string format_derivation(const Derivation& d) {
  std::string out;
  for (const DerivationStep& s : d) {
    out += render(s.formula) + " ; ";
    if (const auto* ax = std::get_if<AxiomStep>(&s.justification)) {
      out += "axiom " + ax->schema;
      bool first = true;
      for (const auto& [k, v] : ax->binding) {
        out += (first ? " " : ", ") + k + "=" + render(v);
        first = false;
      }
    } else if (const auto* mp = std::get_if<ModusPonens>(&s.justification)) {
      out += "mp " + std::to_string(mp->minor) + " " + std::to_string(mp->major);
    } else {
      out += "nec " + std::to_string(std::get<Necessitation>(s.justification).premise);
    }
    out += '\n';
  }
  return out;
}

}  // namespace imlab
