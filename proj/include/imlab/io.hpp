#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "imlab/semantics.hpp"

namespace imlab {

struct LoadOptions {
  /// Replace each valuation by its pre-upward closure instead of rejecting it.
  bool close_valuation = false;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline int parse_index(const std::string& tok, int n, int line_no) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v < 0) throw Error("line " + std::to_string(line_no) + ": expected a world index, got '" + tok + "'");
  if (v >= n) {
    throw Error("line " + std::to_string(line_no) + ": world " + tok + " out of range for " + std::to_string(n) + " worlds");
  }
  return v;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Calls `on_line(line_no, tokens)` for each non-blank line after `worlds <n>`, which must come first.
template <class OnLine>
int read_sections(std::string_view text, int max_worlds, OnLine&& on_line) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n = -1;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(strip_comment(raw));
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks[0] != "worlds" || toks.size() != 2) throw Error("line " + std::to_string(line_no) + ": expected 'worlds <n>' first");
      n = parse_index(toks[1], max_worlds + 1, line_no);
      if (n < 1) throw Error("line " + std::to_string(line_no) + ": need at least one world");
      continue;
    }
    if (toks[0] == "worlds") throw Error("line " + std::to_string(line_no) + ": duplicate 'worlds' line");
    on_line(line_no, n, toks);
  }
  if (n < 0) throw Error("missing 'worlds <n>' line");
  return n;
}

}  // namespace detail

/// Reads `worlds <n>`, `pre <i> <j>`, `mod <i> <j>`, `val <prop> <i>...` lines.
/// Generator edges are closed; valuations must be pre-upward closed unless
/// `opts.close_valuation` is set.
inline BirelModel parse_model(std::string_view text, LoadOptions opts = {}) {
  std::vector<std::pair<int, int>> pre_edges;
  std::vector<std::pair<int, int>> mod_edges;
  Valuation val;
  int n = detail::read_sections(text, kMaxWorlds, [&](int line_no, int n, const std::vector<std::string>& t) {
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (t[0] == "pre" || t[0] == "mod") {
      if (t.size() != 3) throw Error(where + "expected '" + t[0] + " <i> <j>'");
      auto edge = std::pair{detail::parse_index(t[1], n, line_no), detail::parse_index(t[2], n, line_no)};
      (t[0] == "pre" ? pre_edges : mod_edges).push_back(edge);
    } else if (t[0] == "val") {
      if (t.size() < 2) throw Error(where + "expected 'val <prop> <i>...'");
      Formula p = [&] {
        try {
          return Formula::prop(t[1]);
        } catch (const Error& e) {
          throw Error(where + e.what());
        }
      }();
      if (p.is_metavariable()) throw Error(where + "proposition names start with a lowercase letter");
      WorldSet& ext = val[t[1]];
      for (std::size_t i = 2; i < t.size(); ++i) ext.insert(detail::parse_index(t[i], n, line_no));
    } else {
      throw Error(where + "unknown directive '" + t[0] + "'");
    }
  });
  Relation pre(n, pre_edges);
  Relation mod(n, mod_edges);
  BirelFrame frame(reflexive_transitive_closure(pre), transitive_closure(mod));
  if (opts.close_valuation) {
    for (auto& [p, ext] : val) ext = frame.pre().image(ext);
  }
  return make_birel_model(std::move(frame), std::move(val));
}

inline BirelModel load_model(const std::string& path, LoadOptions opts = {}) {
  return parse_model(detail::read_file(path), opts);
}

/// Writes the closed relations edge by edge, so reloading gives an equal model.
inline std::string format_model(const BirelModel& m) {
  std::ostringstream out;
  out << "worlds " << m.frame.size() << "\n";
  for (auto [a, b] : m.frame.pre().pairs()) {
    if (a != b) out << "pre " << a << " " << b << "\n";
  }
  for (auto [a, b] : m.frame.mod().pairs()) out << "mod " << a << " " << b << "\n";
  for (const auto& [p, ext] : m.valuation) {
    out << "val " << p;
    for (int w : ext.members()) out << " " << w;
    out << "\n";
  }
  return out.str();
}

inline void save_model(const BirelModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << format_model(m);
}

/// Reads `worlds <n>` then `open <i>...` lines; the family is validated.
inline FiniteTopology parse_topology(std::string_view text) {
  std::vector<WorldSet> opens;
  int n = detail::read_sections(text, kMaxSweepWorlds, [&](int line_no, int n, const std::vector<std::string>& t) {
    if (t[0] != "open") throw Error("line " + std::to_string(line_no) + ": unknown directive '" + t[0] + "'");
    WorldSet u;
    for (std::size_t i = 1; i < t.size(); ++i) u.insert(detail::parse_index(t[i], n, line_no));
    opens.push_back(u);
  });
  if (TopologyVerdict v = validate_topology(opens, n); !v.ok) throw Error("not a topology: " + v.reason);
  return FiniteTopology(n, std::move(opens));
}

inline FiniteTopology load_topology(const std::string& path) { return parse_topology(detail::read_file(path)); }

inline std::string format_topology(const FiniteTopology& t) {
  std::ostringstream out;
  out << "worlds " << t.size() << "\n";
  for (WorldSet u : t.opens()) {
    out << "open";
    for (int w : u.members()) out << " " << w;
    out << "\n";
  }
  return out.str();
}

inline Derivation load_derivation(const std::string& path) { return parse_derivation(detail::read_file(path)); }

}  // namespace imlab
