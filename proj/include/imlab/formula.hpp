#pragma once

#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "imlab/world_set.hpp"

namespace imlab {

enum class Connective : std::uint8_t { bottom, prop, conj, disj, impl, box, diamond };

/// Immutable modal formula. Negation and verum are sugar over `impl` and `bottom`.
///
/// Identifiers beginning with a lowercase letter are propositions; identifiers
/// beginning with an uppercase letter are schema metavariables.
class Formula {
public:
  static Formula bottom();
  static Formula prop(std::string name);
  static Formula conj(Formula a, Formula b) { return make(Connective::conj, {}, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return make(Connective::disj, {}, std::move(a), std::move(b)); }
  static Formula impl(Formula a, Formula b) { return make(Connective::impl, {}, std::move(a), std::move(b)); }
  static Formula box(Formula a) { return make(Connective::box, {}, std::move(a), {}); }
  static Formula diamond(Formula a) { return make(Connective::diamond, {}, std::move(a), {}); }
  static Formula neg(Formula a) { return impl(std::move(a), bottom()); }
  static Formula top() { return impl(bottom(), bottom()); }

  Connective kind() const;
  /// Proposition or metavariable name; empty for compound formulas.
  const std::string& name() const;
  /// First operand of a binary connective, or the operand of a modality.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& operand() const { return lhs(); }

  bool is_atom() const { return kind() == Connective::prop; }
  bool is_metavariable() const { return is_atom() && std::isupper(static_cast<unsigned char>(name()[0])); }
  bool is_binary() const;
  bool is_modal() const { return kind() == Connective::box || kind() == Connective::diamond; }

  std::size_t node_count() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Connective k, std::string name, Formula a, Formula b);
  Formula() = default;

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  std::string name;
  std::array<Formula, 2> kids;
  std::size_t size;
  std::size_t hash;
};

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return s != "true" && s != "false";
}

inline Formula Formula::make(Connective k, std::string name, Formula a, Formula b) {
  std::size_t size = 1;
  std::size_t h = std::hash<int>{}(static_cast<int>(k)) * 0x9e3779b97f4a7c15ULL;
  if (!name.empty()) h ^= std::hash<std::string>{}(name) + (h << 6) + (h >> 2);
  for (const Formula* f : {&a, &b}) {
    if (f->node_) {
      size += f->node_->size;
      h ^= f->node_->hash + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return Formula(std::make_shared<const Node>(Node{k, std::move(name), {std::move(a), std::move(b)}, size, h}));
}

inline Formula Formula::bottom() {
  static const Formula f = make(Connective::bottom, {}, {}, {});
  return f;
}

inline Formula Formula::prop(std::string name) {
  if (!is_identifier(name)) throw Error("invalid identifier '" + name + "'");
  return make(Connective::prop, std::move(name), {}, {});
}

inline Connective Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::lhs() const { return node_->kids[0]; }
inline const Formula& Formula::rhs() const { return node_->kids[1]; }
inline std::size_t Formula::node_count() const { return node_->size; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline bool Formula::is_binary() const {
  auto k = kind();
  return k == Connective::conj || k == Connective::disj || k == Connective::impl;
}

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size || a.kind() != b.kind()) return false;
  if (a.is_atom()) return a.name() == b.name();
  if (a.kind() == Connective::bottom) return true;
  if (a.is_modal()) return a.operand() == b.operand();
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

/// Structural total order: size, then connective, then name, then children.
inline std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->size <=> b.node_->size; c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_atom()) return a.name().compare(b.name()) <=> 0;
  if (a.kind() == Connective::bottom) return std::strong_ordering::equal;
  if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
  if (a.is_modal()) return std::strong_ordering::equal;
  return a.rhs() <=> b.rhs();
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// ---------------------------------------------------------------------------
// Parsing

class ParseError : public Error {
public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
      : Error(describe(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  static std::string describe(std::size_t offset, const std::vector<std::string>& expected, const std::string& found) {
    std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found;
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

namespace detail {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = implication();
    skip_ws();
    if (pos_ != text_.size()) fail({"'->'", "'|'", "'&'", "end of input"});
    return f;
  }

private:
  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::impl(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = Formula::disj(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conj(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (accept("[]")) return Formula::box(unary());
    if (accept("<>")) return Formula::diamond(unary());
    if (accept("!")) return Formula::neg(unary());
    return atom();
  }

  Formula atom() {
    skip_ws();
    if (accept("(")) {
      Formula f = implication();
      if (!accept(")")) fail({"')'", "'->'", "'|'", "'&'"});
      return f;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty() || !std::isalpha(static_cast<unsigned char>(word[0]))) {
      pos_ = start;
      fail({"identifier", "'false'", "'true'", "'('", "'[]'", "'<>'", "'!'"});
    }
    if (word == "false") return Formula::bottom();
    if (word == "true") return Formula::top();
    return Formula::prop(std::string(word));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the ASCII grammar: `->` (right-assoc) < `|` < `&` < unary `[]`, `<>`, `!`.
inline Formula parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

enum Precedence { kImpl = 1, kDisj = 2, kConj = 3, kUnary = 4, kAtom = 5 };

inline bool is_negation(const Formula& f) {
  return f.kind() == Connective::impl && f.rhs().kind() == Connective::bottom && f.lhs().kind() != Connective::bottom;
}
inline bool is_verum(const Formula& f) {
  return f.kind() == Connective::impl && f.lhs().kind() == Connective::bottom && f.rhs().kind() == Connective::bottom;
}

inline int precedence(const Formula& f) {
  switch (f.kind()) {
    case Connective::bottom:
    case Connective::prop: return kAtom;
    case Connective::box:
    case Connective::diamond: return kUnary;
    case Connective::conj: return kConj;
    case Connective::disj: return kDisj;
    case Connective::impl: return is_verum(f) ? kAtom : is_negation(f) ? kUnary : kImpl;
  }
  return kAtom;
}

inline void render_into(std::string& out, const Formula& f, int min_prec) {
  bool parens = precedence(f) < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::bottom: out += "false"; break;
    case Connective::prop: out += f.name(); break;
    case Connective::box: out += "[]"; render_into(out, f.operand(), kUnary); break;
    case Connective::diamond: out += "<>"; render_into(out, f.operand(), kUnary); break;
    case Connective::conj:
      render_into(out, f.lhs(), kConj);
      out += " & ";
      render_into(out, f.rhs(), kConj + 1);
      break;
    case Connective::disj:
      render_into(out, f.lhs(), kDisj);
      out += " | ";
      render_into(out, f.rhs(), kDisj + 1);
      break;
    case Connective::impl:
      if (is_verum(f)) {
        out += "true";
      } else if (is_negation(f)) {
        out += '!';
        render_into(out, f.lhs(), kUnary);
      } else {
        render_into(out, f.lhs(), kImpl + 1);
        out += " -> ";
        render_into(out, f.rhs(), kImpl);
      }
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

/// Inverse of `parse` with minimal parentheses.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(out, f, detail::kImpl);
  return out;
}

// ---------------------------------------------------------------------------
// Structural measures

inline void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.is_modal()) {
    collect_subformulas(f.operand(), out);
  } else if (f.is_binary()) {
    collect_subformulas(f.lhs(), out);
    collect_subformulas(f.rhs(), out);
  }
}

inline std::set<Formula> subformula_closure(const Formula& f) {
  std::set<Formula> out;
  collect_subformulas(f, out);
  return out;
}

inline int modal_depth(const Formula& f) {
  if (f.is_modal()) return 1 + modal_depth(f.operand());
  if (f.is_binary()) return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
  return 0;
}

/// Proposition names (lowercase atoms) occurring in f, sorted.
inline std::set<std::string> propositions(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.is_atom()) {
      if (!g.is_metavariable()) out.insert(g.name());
    } else if (g.is_modal()) {
      walk(g.operand());
    } else if (g.is_binary()) {
      walk(g.lhs());
      walk(g.rhs());
    }
  };
  walk(f);
  return out;
}

inline std::set<std::string> metavariables(const Formula& f) {
  std::set<std::string> out;
  for (const Formula& g : subformula_closure(f)) {
    if (g.is_metavariable()) out.insert(g.name());
  }
  return out;
}

/// Map from metavariable name to the formula it stands for.
using Binding = std::map<std::string, Formula>;

/// Replaces every metavariable of `schema` by its binding.
inline Formula instantiate(const Formula& schema, const Binding& binding) {
  switch (schema.kind()) {
    case Connective::bottom: return schema;
    case Connective::prop: {
      if (!schema.is_metavariable()) return schema;
      auto it = binding.find(schema.name());
      if (it == binding.end()) throw Error("unbound metavariable " + schema.name());
      return it->second;
    }
    case Connective::box: return Formula::box(instantiate(schema.operand(), binding));
    case Connective::diamond: return Formula::diamond(instantiate(schema.operand(), binding));
    case Connective::conj: return Formula::conj(instantiate(schema.lhs(), binding), instantiate(schema.rhs(), binding));
    case Connective::disj: return Formula::disj(instantiate(schema.lhs(), binding), instantiate(schema.rhs(), binding));
    case Connective::impl: return Formula::impl(instantiate(schema.lhs(), binding), instantiate(schema.rhs(), binding));
  }
  return schema;
}

/// Left-nested conjunction; the empty list yields verum.
inline Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::conj(out, parts[i]);
  return out;
}

}  // namespace imlab
