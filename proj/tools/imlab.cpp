// imlab command-line tool.
//
// Exit status: 0 success/valid/accepted, 1 invalid/rejected/countermodel,
// 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "imlab/imlab.hpp"

using namespace imlab;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2 };

struct Globals {
  bool json = false;
  std::string logic = "CK4";
  int max_worlds = 3;
  bool close_valuation = false;
  std::string semantics = "both";
  bool no_n = false;
};

json to_json(WorldSet s) { return s.members(); }

json to_json(const Valuation& v) {
  json out = json::object();
  for (const auto& [p, s] : v) out[p] = to_json(s);
  return out;
}

json to_json(const Relation& r) {
  json out = json::array();
  for (auto [a, b] : r.pairs()) out.push_back({a, b});
  return out;
}

json to_json(const BirelModel& m) {
  return {{"worlds", m.frame.size()},
          {"pre", to_json(m.frame.pre())},
          {"mod", to_json(m.frame.mod())},
          {"valuation", to_json(m.valuation)}};
}

std::string valuation_text(const Valuation& v) {
  std::string out;
  for (const auto& [p, s] : v) out += (out.empty() ? "" : ", ") + p + "=" + to_string(s);
  return out.empty() ? "(no propositions)" : out;
}

SignatureOptions signature(const Globals& g) { return {.include_n = !g.no_n}; }

bool use_operator(const Globals& g) { return g.semantics != "relational"; }
bool use_relational(const Globals& g) { return g.semantics != "operator"; }

int emit(const Globals& g, const json& j, const std::string& text, int code) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return code;
}

// ---------------------------------------------------------------------------

int cmd_parse(const Globals& g, const std::string& text) {
  Formula f = parse(text);
  json props = json::array();
  for (const std::string& p : propositions(f)) props.push_back(p);
  json j{{"verdict", "ok"},
         {"formula", render(f)},
         {"modal_depth", modal_depth(f)},
         {"size", f.node_count()},
         {"subformulas", subformula_closure(f).size()},
         {"propositions", props}};
  std::ostringstream out;
  out << render(f) << "\n  modal depth " << modal_depth(f) << ", " << f.node_count() << " nodes, "
      << subformula_closure(f).size() << " subformulas\n";
  return emit(g, j, out.str(), kOk);
}

int cmd_eval(const Globals& g, const std::string& path, const std::string& text) {
  BirelModel m = load_model(path, {.close_valuation = g.close_valuation});
  Formula f = parse(text);
  json j{{"formula", render(f)}};
  std::ostringstream out;
  out << render(f) << "\n";
  std::optional<WorldSet> op, rel;
  if (use_operator(g)) {
    op = extension(frame_to_space(m.frame), m.valuation, f);
    j["operator"] = to_json(*op);
    out << "  operator:   " << to_string(*op) << "\n";
  }
  if (use_relational(g)) {
    rel = relational_extension(m, f);
    j["relational"] = to_json(*rel);
    out << "  relational: " << to_string(*rel) << "\n";
  }
  bool agree = !(op && rel) || *op == *rel;
  j["verdict"] = agree ? "ok" : "mismatch";
  if (!agree) out << "  evaluators disagree\n";
  return emit(g, j, out.str(), agree ? kOk : kNegative);
}

int cmd_valid(const Globals& g, const std::string& path, const std::string& text) {
  BirelModel m = load_model(path, {.close_valuation = g.close_valuation});
  Formula f = parse(text);
  std::optional<ValidityReport> op, rel;
  if (use_operator(g)) op = valid_on_space(frame_to_space(m.frame), f);
  if (use_relational(g)) rel = valid_on_frame(m.frame, f);
  const ValidityReport& r = op ? *op : *rel;
  if (op && rel && op->valid != rel->valid) {
    json j{{"verdict", "mismatch"}, {"operator", op->valid}, {"relational", rel->valid}};
    return emit(g, j, "evaluators disagree on validity\n", kNegative);
  }
  json j{{"verdict", r.valid ? "valid" : "invalid"}, {"formula", render(f)}};
  std::ostringstream out;
  out << render(f) << ": " << (r.valid ? "valid" : "invalid") << " on the frame\n";
  if (r.witness) {
    j["witness"] = {{"valuation", to_json(r.witness->valuation)}, {"world", r.witness->world}};
    out << "  refuted at world " << r.witness->world << " under " << valuation_text(r.witness->valuation) << "\n";
  }
  j["stats"] = {{"valuations_checked", r.valuations_checked}};
  out << "  " << r.valuations_checked << " valuations checked\n";
  return emit(g, j, out.str(), r.valid ? kOk : kNegative);
}

int cmd_classify_frame(const Globals& g, const std::string& path, bool check_logic) {
  BirelModel m = load_model(path, {.close_valuation = g.close_valuation});
  FrameProperties p = frame_properties(m.frame);
  json classes = json::array();
  std::string class_text;
  for (LogicId l : classify_frame(m.frame)) {
    classes.push_back(logic_name(l));
    class_text += " " + std::string(logic_name(l));
  }
  json j{{"forward_confluent", p.forward_confluent}, {"backward_confluent", p.backward_confluent},
         {"downward_confluent", p.downward_confluent}, {"locally_linear", p.locally_linear},
         {"mod_reflexive", p.mod_reflexive},         {"mod_irreflexive", p.mod_irreflexive},
         {"classes", classes}};
  std::ostringstream out;
  out << "pre  " << to_string(m.frame.pre()) << "\nmod  " << to_string(m.frame.mod()) << "\nlead "
      << to_string(m.frame.lead()) << "\n";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "forward confluent   " << yn(p.forward_confluent) << "\nbackward confluent  " << yn(p.backward_confluent)
      << "\ndownward confluent  " << yn(p.downward_confluent) << "\nlocally linear      " << yn(p.locally_linear)
      << "\nmod reflexive       " << yn(p.mod_reflexive) << "\nmod irreflexive     " << yn(p.mod_irreflexive)
      << "\nclasses            " << class_text << "\n";
  int code = kOk;
  if (check_logic) {
    bool in = in_frame_class(p, parse_logic(g.logic));
    j["verdict"] = in ? "member" : "not-member";
    out << g.logic << ": " << (in ? "member" : "not a member") << "\n";
    code = in ? kOk : kNegative;
  }
  return emit(g, j, out.str(), code);
}

int classify_space_report(const Globals& g, const OperatorSpace& s, bool check_logic) {
  if (LawReport r = space_report(s); !r) {
    json j{{"verdict", "not-a-space"}, {"law", r.law}, {"witness", to_json(r.witness_a)}};
    return emit(g, j, "not a polyderivative space: " + r.law + " at A=" + to_string(r.witness_a) + "\n", kNegative);
  }
  SpaceClassification c = space_classify(s);
  json classes = json::array();
  std::string class_text;
  for (LogicId l : c.classes) {
    classes.push_back(logic_name(l));
    class_text += " " + std::string(logic_name(l));
  }
  json j{{"diamond_coarse", c.diamond_coarse},
         {"diamond_regular", c.diamond_regular},
         {"box_regular", c.box_regular},
         {"extremally_disconnected", c.extremally_disconnected},
         {"hereditarily_ed", c.hereditarily_ed},
         {"literal_ed_equation", c.literal_ed_equation},
         {"cs4", c.cs4},
         {"classes", classes}};
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "diamond-coarse      " << yn(c.diamond_coarse) << "\ndiamond-regular     " << yn(c.diamond_regular)
      << "\nbox-regular         " << yn(c.box_regular) << "\nED                  " << yn(c.extremally_disconnected)
      << "\nHED                 " << yn(c.hereditarily_ed) << "\nCS4                 " << yn(c.cs4)
      << "\nclasses            " << class_text << "\n";
  int code = kOk;
  if (check_logic) {
    bool in = in_space_class(c, parse_logic(g.logic));
    j["verdict"] = in ? "member" : "not-member";
    out << g.logic << ": " << (in ? "member" : "not a member") << "\n";
    code = in ? kOk : kNegative;
  }
  return emit(g, j, out.str(), code);
}

int cmd_classify_space(const Globals& g, const std::string& model, const std::vector<std::string>& tritop,
                       const std::string& kind, bool check_logic) {
  if (!tritop.empty()) {
    TriTopSpace x(load_topology(tritop[0]), load_topology(tritop[1]), load_topology(tritop[2]));
    return classify_space_report(g, induce(x, kind == "closure" ? InducedKind::closure : InducedKind::derivative),
                                 check_logic);
  }
  if (model.empty()) throw CLI::ValidationError("classify-space needs a model file or --tritop");
  return classify_space_report(g, frame_to_space(load_model(model, {.close_valuation = g.close_valuation}).frame),
                               check_logic);
}

int cmd_topo_props(const Globals& g, const std::string& path) {
  FiniteTopology t = load_topology(path);
  TopologyProperties p = topo_properties(t);
  json j{{"points", t.size()},
         {"opens", t.opens().size()},
         {"td", p.td},
         {"extremally_disconnected", p.extremally_disconnected},
         {"hereditarily_ed", p.hereditarily_ed},
         {"scattered", p.scattered}};
  if (p.td_witness) j["td_witness"] = to_json(*p.td_witness);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << t.size() << " points, " << t.opens().size() << " open sets\nT_d        " << yn(p.td);
  if (p.td_witness) out << " (derived set of " << to_string(*p.td_witness) << " is not closed)";
  out << "\nED         " << yn(p.extremally_disconnected) << "\nHED        " << yn(p.hereditarily_ed)
      << "\nscattered  " << yn(p.scattered) << "\n";
  return emit(g, j, out.str(), kOk);
}

int verdict_output(const Globals& g, const CheckVerdict& v, std::size_t steps) {
  json j{{"verdict", v.accepted ? "accepted" : "rejected"}, {"logic", g.logic}, {"steps", steps}};
  std::ostringstream out;
  if (v.accepted) {
    out << "accepted in " << g.logic << " (" << steps << " steps)\n";
  } else {
    out << "rejected in " << g.logic;
    if (v.failed_step) {
      j["failed_step"] = *v.failed_step;
      out << " at step " << *v.failed_step;
    }
    out << ": " << v.reason << "\n";
  }
  j["reason"] = v.reason;
  return emit(g, j, out.str(), v.accepted ? kOk : kNegative);
}

int cmd_derive(const Globals& g, const std::string& path) {
  Derivation d = load_derivation(path);
  return verdict_output(g, check_derivation(d, parse_logic(g.logic), signature(g)), d.size());
}

int cmd_entail(const Globals& g, const std::string& path, const std::vector<std::string>& premises,
               const std::string& conclusion) {
  EntailmentCertificate c{{}, parse(conclusion), load_derivation(path)};
  for (const std::string& p : premises) c.premises.push_back(parse(p));
  return verdict_output(g, check_entailment(c, parse_logic(g.logic), signature(g)), c.derivation.size());
}

int cmd_search(const Globals& g, const std::string& text, unsigned threads, bool iso) {
  Formula f = parse(text);
  LogicId l = parse_logic(g.logic);
  SearchResult r = find_countermodel(f, l, g.max_worlds, {.threads = threads, .enumeration = {.isomorphism_reduction = iso}});
  json j{{"verdict", r.countermodel ? "countermodel" : "none-found"}, {"logic", g.logic}, {"formula", render(f)}};
  std::ostringstream out;
  if (r.countermodel) {
    const BirelModel& m = r.countermodel->model;
    j["witness"] = {{"model", to_json(m)}, {"valuation", to_json(m.valuation)}, {"world", r.countermodel->world}};
    out << "countermodel in " << g.logic << ", refuted at world " << r.countermodel->world << ":\n" << format_model(m);
  } else {
    out << "no countermodel in " << g.logic << " frames up to " << g.max_worlds << " worlds\n";
  }
  j["stats"] = {{"frames_enumerated", r.frames_enumerated}, {"valuations_checked", r.valuations_checked}};
  out << "  " << r.frames_enumerated << " frames, " << r.valuations_checked << " valuations\n";
  return emit(g, j, out.str(), r.countermodel ? kNegative : kOk);
}

int cmd_irreflexivize(const Globals& g, const std::string& path, int copies, const std::string& coupling,
                      const std::string& output) {
  BirelModel m = load_model(path, {.close_valuation = g.close_valuation});
  BirelModel out_model =
      irreflexivize(m, copies, coupling == "same-level" ? IndexCoupling::same_level : IndexCoupling::free);
  if (!output.empty()) save_model(out_model, output);
  json j = to_json(out_model);
  return emit(g, j, format_model(out_model), kOk);
}

int cmd_bisim(const Globals& g, const std::string& a, const std::string& b, std::optional<int> depth,
              const std::vector<int>& worlds) {
  BirelModel m1 = load_model(a, {.close_valuation = g.close_valuation});
  BirelModel m2 = load_model(b, {.close_valuation = g.close_valuation});
  if (!depth) {
    BisimRelation z = largest_bisimulation(m1, m2);
    json pairs = json::array();
    std::ostringstream out;
    out << "largest bisimulation:";
    for (auto [x, y] : z.pairs()) {
      pairs.push_back({x, y});
      out << " (" << x << "," << y << ")";
    }
    out << (z.empty() ? " empty\n" : "\n");
    return emit(g, {{"verdict", "ok"}, {"pairs", pairs}}, out.str(), kOk);
  }
  if (worlds.size() != 2) throw CLI::ValidationError("--depth needs --worlds <w1> <w2>");
  std::set<std::string> props;
  for (const auto& [p, s] : m1.valuation) props.insert(p);
  for (const auto& [p, s] : m2.valuation) props.insert(p);
  EquivalenceVerdict v = depth_bounded_equivalence(m1, worlds[0], m2, worlds[1], *depth, props);
  json j{{"verdict", v.agree ? "agree" : "separated"}, {"depth", *depth}};
  std::ostringstream out;
  out << "worlds " << worlds[0] << " and " << worlds[1] << (v.agree ? " agree" : " differ") << " on formulas of depth <= "
      << *depth << "\n";
  if (v.separating) {
    j["separating"] = render(*v.separating);
    out << "  separated by " << render(*v.separating) << "\n";
  }
  return emit(g, j, out.str(), v.agree ? kOk : kNegative);
}

// ---------------------------------------------------------------------------
// Demos

int demo_meet(const Globals& g) {
  const Formula phi = parse("[]q -> p | (p -> q)");
  std::uint64_t spaces = 0, skipped = 0, bad = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<FiniteTopology> all = enumerate_topologies(n);
    for (const FiniteTopology& arrow : all) {
      for (const FiniteTopology& dia : all) {
        if (!is_td(dia)) continue;
        TriTopSpace x = bitop_to_tritop(arrow, dia);
        if (!is_td(x.box)) {
          ++skipped;
          continue;
        }
        ++spaces;
        if (!valid_on_space(induce(x, InducedKind::derivative), phi).valid) ++bad;
      }
    }
  }
  BirelModel m = make_birel_model(BirelFrame::from_generators(3, {{0, 1}}, {{0, 2}, {1, 2}}), {{"p", {1}}, {"q", {2}}});
  WorldSet ext = extension(induce(frame_to_tritop(m.frame), InducedKind::derivative), m.valuation, phi);
  WorldSet rel = relational_extension(m, phi);
  json j{{"formula", render(phi)},
         {"sweep", {{"spaces", spaces}, {"refuting", bad}, {"skipped_meet_not_td", skipped}}},
         {"witness", {{"model", to_json(m)}, {"valuation", to_json(m.valuation)}, {"world", (WorldSet::full(m.frame.size()) - ext).first()}}},
         {"extension", to_json(ext)},
         {"relational_extension", to_json(rel)}};
  bool ok = bad == 0 && !ext.contains(0) && !rel.contains(0);
  j["verdict"] = ok ? "reproduced" : "not-reproduced";
  std::ostringstream out;
  out << render(phi) << "\n  meet-based T_d bitopological spaces on <= 3 points: " << spaces << " checked, " << bad
      << " refute it (" << skipped << " skipped, meet not T_d)\n  with the box topology from lead instead:\n"
      << format_model(m) << "  extension " << to_string(ext) << " (topological), " << to_string(rel)
      << " (relational); world 0 refutes it\n";
  return emit(g, j, out.str(), ok ? kOk : kNegative);
}

int demo_fs(const Globals& g) {
  BirelModel m = make_birel_model(BirelFrame::from_generators(3, {{1, 2}}, {{0, 1}}), {{"p", {2}}, {"q", {}}});
  const Formula fs = parse("(<>p -> []q) -> [](p -> q)");
  const Formula ante = parse("<>p -> []q"), post = parse("[](p -> q)");
  OperatorSpace s = frame_to_space(m.frame);
  WorldSet ea = extension(s, m.valuation, ante), ep = extension(s, m.valuation, post), ef = extension(s, m.valuation, fs);
  FrameProperties p = frame_properties(m.frame);
  bool ok = ea.contains(0) && !ep.contains(0) && !ef.contains(0) && !p.backward_confluent;
  json j{{"verdict", ok ? "reproduced" : "not-reproduced"},
         {"formula", render(fs)},
         {"witness", {{"model", to_json(m)}, {"valuation", to_json(m.valuation)}, {"world", 0}}},
         {"backward_confluent", p.backward_confluent},
         {"extensions", {{render(ante), to_json(ea)}, {render(post), to_json(ep)}, {render(fs), to_json(ef)}}}};
  std::ostringstream out;
  out << format_model(m) << "  backward confluent: " << (p.backward_confluent ? "yes" : "no") << "\n  ||" << render(ante)
      << "|| = " << to_string(ea) << "  (world 0 satisfies it)\n  ||" << render(post) << "|| = " << to_string(ep)
      << "  (world 0 refutes it)\n  ||" << render(fs) << "|| = " << to_string(ef) << "\n";
  return emit(g, j, out.str(), ok ? kOk : kNegative);
}

int demo_loeb(const Globals& g) {
  const Formula l = parse("[]([]p -> p) -> []p");
  BirelModel l1 = make_birel_model(BirelFrame::from_generators(1, {}, {{0, 0}}), {{"p", {}}});
  bool refuted = !relational_extension(l1, l).contains(0) && !extension(frame_to_space(l1.frame), l1.valuation, l).contains(0);
  std::uint64_t spaces = 0, rejected = 0, bad = 0;
  for (int n = 1; n <= g.max_worlds; ++n) {
    std::vector<FiniteTopology> all = enumerate_topologies(n);
    std::vector<FiniteTopology> td;
    for (const FiniteTopology& t : all) {
      if (is_td(t)) td.push_back(t);
    }
    for (const FiniteTopology& arrow : all) {
      for (const FiniteTopology& dia : td) {
        for (const FiniteTopology& box : td) {
          OperatorSpace s = induce(TriTopSpace(arrow, dia, box), InducedKind::derivative);
          if (!space_report(s).ok) {
            ++rejected;
            continue;
          }
          ++spaces;
          if (!valid_on_space(s, l).valid) ++bad;
        }
      }
    }
  }
  bool ok = refuted && bad == 0;
  json j{{"verdict", ok ? "reproduced" : "not-reproduced"},
         {"formula", render(l)},
         {"witness", {{"model", to_json(l1)}, {"valuation", to_json(l1.valuation)}, {"world", 0}}},
         {"sweep", {{"max_points", g.max_worlds}, {"spaces", spaces}, {"refuting", bad}, {"not_spaces", rejected}}}};
  std::ostringstream out;
  out << render(l) << "\n  reflexive point, p empty: " << (refuted ? "refuted" : "not refuted")
      << " at world 0\n  T_d derivative spaces on <= " << g.max_worlds << " points: " << spaces << " checked, " << bad
      << " refute it (" << rejected << " triples fail the space laws)\n";
  return emit(g, j, out.str(), ok ? kOk : kNegative);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model workbench for intuitionistic modal logics"};
  app.require_subcommand(1);
  Globals g;
  std::vector<std::string> logics;
  for (LogicId l : kAllLogics) logics.emplace_back(logic_name(l));
  app.add_flag("--json", g.json, "Structured output");
  app.add_option("--logic", g.logic, "Logic identifier")->check(CLI::IsMember(logics));
  auto* max_worlds = app.add_option("--max-worlds", g.max_worlds, "World bound for searches and sweeps")->check(CLI::Range(1, 4));
  app.add_flag("--close-valuation", g.close_valuation, "Close valuations upward instead of rejecting them");
  app.add_option("--semantics", g.semantics, "Evaluator")->check(CLI::IsMember({"operator", "relational", "both"}));
  app.add_flag("--no-n", g.no_n, "Drop N from the base axioms");
  app.fallthrough();

  std::string formula, model, model2, file, kind = "derivative", coupling = "free", output, conclusion;
  std::vector<std::string> tritop, premises;
  std::vector<int> worlds;
  std::optional<int> depth;
  int copies = 2;
  unsigned threads = 1;
  bool iso = false, check_logic = false;
  std::string demo;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and render a formula");
  parse_cmd->add_option("formula", formula)->required();

  auto* eval_cmd = app.add_subcommand("eval", "Extension of a formula in a model");
  eval_cmd->add_option("model", model)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("formula", formula)->required();

  auto* valid_cmd = app.add_subcommand("valid", "Validity on the frame of a model file");
  valid_cmd->add_option("model", model)->required()->check(CLI::ExistingFile);
  valid_cmd->add_option("formula", formula)->required();

  auto* cf_cmd = app.add_subcommand("classify-frame", "Frame conditions and frame classes");
  cf_cmd->add_option("model", model)->required()->check(CLI::ExistingFile);
  cf_cmd->add_flag("--check", check_logic, "Exit 1 unless the frame is in the --logic class");

  auto* cs_cmd = app.add_subcommand("classify-space", "Space predicates of a frame space or an induced space");
  cs_cmd->add_option("model", model)->check(CLI::ExistingFile);
  cs_cmd->add_option("--tritop", tritop, "Three topology files: arrow, diamond, box")->expected(3)->check(CLI::ExistingFile);
  cs_cmd->add_option("--kind", kind, "Induced operators")->check(CLI::IsMember({"derivative", "closure"}));
  cs_cmd->add_flag("--check", check_logic, "Exit 1 unless the space is in the --logic class");

  auto* tp_cmd = app.add_subcommand("topo-props", "Properties of a finite topology");
  tp_cmd->add_option("topology", file)->required()->check(CLI::ExistingFile);

  auto* derive_cmd = app.add_subcommand("derive", "Check a Hilbert derivation");
  derive_cmd->add_option("derivation", file)->required()->check(CLI::ExistingFile);

  auto* entail_cmd = app.add_subcommand("entail", "Check an entailment certificate");
  entail_cmd->add_option("derivation", file)->required()->check(CLI::ExistingFile);
  entail_cmd->add_option("--premise", premises, "Premise formula (repeatable)");
  entail_cmd->add_option("--conclusion", conclusion)->required();

  auto* search_cmd = app.add_subcommand("search", "Countermodel search over small frames");
  search_cmd->add_option("formula", formula)->required();
  search_cmd->add_option("--threads", threads)->check(CLI::Range(1U, 256U));
  search_cmd->add_flag("--isomorphism-reduction", iso, "Skip non-canonical labelings");

  auto* irr_cmd = app.add_subcommand("irreflexivize", "Truncated irreflexivization of a model");
  irr_cmd->add_option("model", model)->required()->check(CLI::ExistingFile);
  irr_cmd->add_option("--copies", copies)->check(CLI::Range(1, 32));
  irr_cmd->add_option("--coupling", coupling)->check(CLI::IsMember({"free", "same-level"}));
  irr_cmd->add_option("-o,--output", output, "Also write the model to this file");

  auto* bisim_cmd = app.add_subcommand("bisim", "Largest bisimulation, or depth-bounded equivalence of two points");
  bisim_cmd->add_option("left", model)->required()->check(CLI::ExistingFile);
  bisim_cmd->add_option("right", model2)->required()->check(CLI::ExistingFile);
  bisim_cmd->add_option("--depth", depth)->check(CLI::Range(0, 3));
  bisim_cmd->add_option("--worlds", worlds)->expected(2);

  auto* demo_cmd = app.add_subcommand("demo", "Reproduce a worked example");
  demo_cmd->add_option("name", demo)->required()->check(CLI::IsMember({"lemma-6.2", "footnote-2", "loeb"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*parse_cmd) {
      try {
        return cmd_parse(g, formula);
      } catch (const ParseError& e) {
        return emit(g, {{"verdict", "invalid"}, {"error", e.what()}}, std::string("invalid: ") + e.what() + "\n", kNegative);
      }
    }
    if (*eval_cmd) return cmd_eval(g, model, formula);
    if (*valid_cmd) return cmd_valid(g, model, formula);
    if (*cf_cmd) return cmd_classify_frame(g, model, check_logic);
    if (*cs_cmd) return cmd_classify_space(g, model, tritop, kind, check_logic);
    if (*tp_cmd) return cmd_topo_props(g, file);
    if (*derive_cmd) return cmd_derive(g, file);
    if (*entail_cmd) return cmd_entail(g, file, premises, conclusion);
    if (*search_cmd) return cmd_search(g, formula, threads, iso);
    if (*irr_cmd) return cmd_irreflexivize(g, model, copies, coupling, output);
    if (*bisim_cmd) return cmd_bisim(g, model, model2, depth, worlds);
    if (*demo_cmd) {
      if (demo == "lemma-6.2") return demo_meet(g);
      if (demo == "footnote-2") return demo_fs(g);
      // The Loeb sweep covers four points unless told otherwise.
      if (max_worlds->count() == 0) g.max_worlds = 4;
      return demo_loeb(g);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
