// moufang: construct Chein loops, check loop tables, verify presentations,
// plan goodness derivations, run the census and rebuild the order-12 picture.
//
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 on usage or input errors.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "moufang/catalog.hpp"
#include "moufang/census.hpp"
#include "moufang/chein.hpp"
#include "moufang/isomorphism.hpp"
#include "moufang/kunen.hpp"
#include "moufang/loop_json.hpp"
#include "moufang/presentation.hpp"
#include "moufang/visual.hpp"

namespace {

using namespace moufang;
using ordered_json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct CommandConfig {
  std::string group;
  std::string relators;
  std::string word;
  std::string emit = "text";
  std::string output;
  std::string table_path;
  std::string iso_left, iso_right;
  std::size_t max_order = 31;
  bool json = false;
  bool kunen = false;
};

void write_out(const CommandConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(cfg.output, text);
  }
}

Group resolve_group(const std::string& selector) {
  if (std::filesystem::is_regular_file(selector)) return group_from_loop(loop_from_json(read_text_file(selector)));
  return parse_group_selector(selector);
}

// A path to a JSON table, "chein:<group>", "m12", or a group selector.
Loop resolve_loop(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return loop_from_json(read_text_file(spec));
  if (spec.starts_with("chein:")) return chein_construct(resolve_group(spec.substr(6)));
  if (spec == "m12") return build_visual_loop(derive_triangles());
  return parse_group_selector(spec).loop();
}

ordered_json triple_json(const std::optional<Triple>& t) {
  if (!t) return nullptr;
  return ordered_json::array({t->a, t->b, t->c});
}

int cmd_chein(const CommandConfig& cfg) {
  write_out(cfg, to_json(chein_construct(resolve_group(cfg.group))));
  return kPass;
}

int cmd_table(const CommandConfig& cfg) {
  write_out(cfg, to_json(resolve_group(cfg.group).loop()));
  return kPass;
}

int cmd_kunen(const CommandConfig& cfg) {
  const int cap = kunen_max_order_from_env();
  bool ok = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  for (const auto& r : kunen_check(cap)) {
    ok = ok && r.holds();
    rows.push_back({{"order", r.order}, {"latin_squares", r.latin_squares}, {"moufang", r.moufang},
                    {"moufang_with_neutral", r.moufang_with_neutral}, {"holds", r.holds()}});
    text << "order " << r.order << ": " << r.latin_squares << " Latin squares, " << r.moufang
         << " satisfy Moufang identity 1, " << r.moufang_with_neutral << " of those have a neutral "
         << (r.holds() ? "PASS" : "FAIL") << "\n";
  }
  write_out(cfg, cfg.json ? ordered_json{{"kunen", rows}, {"pass", ok}}.dump(2) + "\n" : text.str());
  return ok ? kPass : kFail;
}

int cmd_check(const CommandConfig& cfg) {
  if (cfg.kunen) return cmd_kunen(cfg);
  if (cfg.table_path.empty()) throw CLI::ValidationError("check", "a table path is required");
  const TableFile file = table_from_json(read_text_file(cfg.table_path));
  const Magma& m = file.magma;
  ordered_json report;
  report["order"] = m.order();
  const bool latin = is_quasigroup(m);
  const auto neutral = find_neutral(m);
  const bool declared_ok = !file.neutral || (neutral && *file.neutral == *neutral);
  report["latin_square"] = latin;
  report["neutral"] = neutral ? ordered_json(m.name(*neutral)) : ordered_json(nullptr);
  report["declared_neutral_ok"] = declared_ok;
  const bool loop = latin && neutral && declared_ok;
  report["loop"] = loop;
  for (int v = 1; v <= 3; ++v) {
    const auto r = moufang_check(m, v);
    report["moufang" + std::to_string(v)] = {{"holds", r.holds}, {"counterexample", triple_json(r.witness)}};
  }
  const auto assoc = is_associative(m);
  report["associative"] = {{"holds", assoc.holds}, {"counterexample", triple_json(assoc.witness)}};
  if (loop) report["diassociative"] = is_diassociative(Loop(m, *neutral));
  report["commutative"] = is_commutative(m);

  if (cfg.json) {
    write_out(cfg, report.dump(2) + "\n");
  } else {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    auto triple = [&m](const std::optional<Triple>& t) {
      return t ? " (first counterexample " + m.name(t->a) + ", " + m.name(t->b) + ", " + m.name(t->c) + ")"
               : std::string{};
    };
    out << "order: " << m.order() << "\n";
    out << "latin square: " << yn(latin) << "\n";
    out << "neutral: " << (neutral ? m.name(*neutral) : "none") << (declared_ok ? "" : " (declared neutral is wrong)")
        << "\n";
    out << "loop: " << yn(loop) << "\n";
    for (int v = 1; v <= 3; ++v) {
      const auto r = moufang_check(m, v);
      out << "moufang identity " << v << ": " << yn(r.holds) << triple(r.witness) << "\n";
    }
    out << "associative: " << yn(assoc.holds) << triple(assoc.witness) << "\n";
    if (loop) out << "diassociative: " << yn(report["diassociative"].get<bool>()) << "\n";
    out << "commutative: " << yn(report["commutative"].get<bool>()) << "\n";
    write_out(cfg, out.str());
  }
  return loop ? kPass : kFail;
}

int cmd_verify_presentation(const CommandConfig& cfg) {
  const Group g = resolve_group(cfg.group);
  PresentationSpec spec{cfg.relators.empty() ? standard_relators(cfg.group) : parse_relators(cfg.relators)};
  ordered_json report;
  std::ostringstream text;
  bool pass = false;
  try {
    const auto rel = verify_presentation_relations(g, spec);
    const auto closure = goodness_closure(g);
    const auto replay = replay_certificate(g, closure.certificate);
    bool plans_ok = true;
    for (const auto& step : closure.certificate.steps) {
      plans_ok = plans_ok && validate_plan(g, plan_derivation(step.output)).ok;
    }
    pass = rel.holds() && closure.complete && replay.ok && plans_ok;

    ordered_json relators = ordered_json::array();
    for (const auto& r : rel.relators) relators.push_back({{"relator", r.relator}, {"holds", r.holds}});
    ordered_json steps = ordered_json::array();
    for (const auto& s : closure.certificate.steps) {
      ordered_json inputs = ordered_json::array();
      for (const auto& w : s.inputs) inputs.push_back(w.str());
      steps.push_back({{"kind", to_string(s.kind)}, {"inputs", inputs}, {"output", s.output.str()},
                       {"element", g.name(evaluate_word(g, s.output))}});
    }
    report = {{"group", cfg.group}, {"moufang_model", rel.moufang}, {"relators", relators},
              {"closure_complete", closure.complete}, {"certificate_replay", replay.ok},
              {"plans_valid", plans_ok}, {"certificate", steps}, {"result", pass ? "PASS" : "FAIL"}};

    text << (pass ? "PASS" : "FAIL") << " " << cfg.group << " (order " << g.order() << ")\n";
    text << "model is Moufang: " << (rel.moufang ? "yes" : "no") << "\n";
    for (const auto& r : rel.relators) text << "  " << r.relator << " = e: " << (r.holds ? "yes" : "no") << "\n";
    text << "goodness closure: " << closure.good.size() << "/" << g.order() << " elements"
         << (replay.ok ? "" : " (replay failed at step " + std::to_string(replay.failing_step + 1) + ": " +
                                  replay.reason + ")")
         << "\n";
    text << "certificate:\n" << certificate_to_text(g, closure.certificate);
  } catch (const RelationsFailInG& e) {
    report = {{"group", cfg.group}, {"result", "FAIL"}, {"error", e.what()}};
    text << "FAIL " << cfg.group << ": " << e.what() << "\n";
  }
  write_out(cfg, cfg.json ? report.dump(2) + "\n" : text.str());
  return pass ? kPass : kFail;
}

int cmd_derive(const CommandConfig& cfg) {
  const Word w = Word::parse(cfg.word);
  const PlanNode plan = plan_derivation(w);
  std::string out = cfg.emit == "dot" ? plan_to_dot(plan) : plan_to_text(plan);
  int status = kPass;
  if (!cfg.group.empty()) {
    const auto check = validate_plan(resolve_group(cfg.group), plan);
    if (cfg.emit != "dot") {
      out += check.ok ? "valid in " + cfg.group + "\n"
                      : "INVALID in " + cfg.group + " at " + check.path + ": " + check.reason + "\n";
    }
    if (!check.ok) status = kFail;
  }
  write_out(cfg, out);
  return status;
}

int cmd_iso(const CommandConfig& cfg) {
  const Loop a = resolve_loop(cfg.iso_left);
  const Loop b = resolve_loop(cfg.iso_right);
  const auto w = find_isomorphism(a, b);
  if (cfg.json) {
    ordered_json map = nullptr;
    if (w) {
      map = ordered_json::object();
      for (std::size_t i = 0; i < w->size(); ++i) map[a.name(static_cast<Element>(i))] = b.name((*w)[i]);
    }
    write_out(cfg, ordered_json{{"isomorphic", w.has_value()}, {"mapping", map}}.dump(2) + "\n");
  } else if (w) {
    std::ostringstream out;
    out << "isomorphic\n";
    for (std::size_t i = 0; i < w->size(); ++i) out << "  " << a.name(static_cast<Element>(i)) << " -> " << b.name((*w)[i]) << "\n";
    write_out(cfg, out.str());
  } else {
    write_out(cfg, "not isomorphic\n");
  }
  return w ? kPass : kFail;
}

int cmd_sigma(const CommandConfig& cfg) {
  const auto entries = sigma_census(cfg.max_order);
  if (cfg.json) {
    ordered_json list = ordered_json::array();
    for (const auto& e : entries) {
      list.push_back({{"name", e.name}, {"order", e.order}, {"group", e.selector}, {"aliases", e.aliases}});
    }
    write_out(cfg, ordered_json{{"max_order", cfg.max_order}, {"loops", list}, {"count", entries.size()}}.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& e : entries) {
      out << e.name << "  order " << e.order << "  from " << e.selector;
      for (const auto& a : e.aliases) out << ", " << a;
      out << "\n";
    }
    out << "count: " << entries.size() << "\n";
    write_out(cfg, out.str());
  }
  return kPass;
}

int cmd_m12(const CommandConfig& cfg) {
  const VisualSpec spec = derive_triangles();
  if (cfg.emit == "dot") {
    write_out(cfg, emit_diagram(spec));
    return kPass;
  }
  const Loop l = build_visual_loop(spec);
  if (cfg.emit == "table") {
    write_out(cfg, to_json(l));
    return kPass;
  }
  const VisualReport report = verify_visual_claims(l);
  const bool equal = l.magma().cells() == relabeled_chein_m12().magma().cells();
  if (cfg.json) {
    ordered_json claims = ordered_json::array();
    for (const auto& c : report.claims) claims.push_back({{"claim", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    ordered_json tri = ordered_json::array();
    for (const auto& t : spec.triangles) tri.push_back(t);
    write_out(cfg, ordered_json{{"triangles", tri}, {"matches_chein_table", equal}, {"claims", claims},
                                {"pass", report.pass() && equal}}.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "triangles:";
    for (const auto& t : spec.triangles) out << " {" << t[0] << "," << t[1] << "," << t[2] << "}";
    out << "\n" << (equal ? "PASS" : "FAIL") << " table equals relabeled M12(S3,2)\n" << report.to_text();
    write_out(cfg, out.str());
  }
  return report.pass() && equal ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moufang loops M_2n(G,2): construction, checks and presentations"};
  app.fallthrough();
  app.require_subcommand(1);
  CommandConfig cfg;
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("-o,--output", cfg.output, "Write output to a file");

  auto* chein = app.add_subcommand("chein", "Print the Chein loop M_2n(G,2) as a JSON table");
  chein->add_option("--group", cfg.group, "Catalog selector or JSON table path")->required();

  auto* table = app.add_subcommand("table", "Print a catalog group as a JSON table");
  table->add_option("--group", cfg.group, "Catalog selector")->required();

  auto* check = app.add_subcommand("check", "Check loop axioms and identities of a JSON table");
  check->add_option("path", cfg.table_path, "JSON table file")->check(CLI::ExistingFile);
  check->add_flag("--kunen", cfg.kunen, "Exhaustive Latin-square check (order cap MOUFANG_KUNEN_MAX)");

  auto* verify = app.add_subcommand("verify-presentation", "Verify the Moufang presentation of M_2n(G,2)");
  verify->add_option("--group", cfg.group, "Catalog selector")->required();
  verify->add_option("--relators", cfg.relators, "Relators of G, ';'-separated (default: catalog presentation)");

  auto* derive = app.add_subcommand("derive", "Plan a goodness derivation for a word");
  derive->add_option("--word", cfg.word, "Word in x, y")->required();
  derive->add_option("--emit", cfg.emit, "text or dot")->check(CLI::IsMember({"text", "dot"}));
  derive->add_option("--group", cfg.group, "Validate the plan in this group");

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two loops");
  iso->add_option("left", cfg.iso_left, "JSON path, chein:<group>, m12, or group selector")->required();
  iso->add_option("right", cfg.iso_right, "JSON path, chein:<group>, m12, or group selector")->required();

  auto* sigma = app.add_subcommand("sigma", "Non-associative M_2n(G,2) of order <= max, up to isomorphism");
  sigma->add_option("--max-order", cfg.max_order, "Largest loop order")->check(CLI::Range(1, static_cast<int>(kMaxCensusOrder)));

  auto* m12 = app.add_subcommand("m12", "The order-12 picture model");
  m12->add_option("--emit", cfg.emit, "table, dot or report")->check(CLI::IsMember({"table", "dot", "report", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (*chein) return cmd_chein(cfg);
    if (*table) return cmd_table(cfg);
    if (*check) return cmd_check(cfg);
    if (*verify) return cmd_verify_presentation(cfg);
    if (*derive) return cmd_derive(cfg);
    if (*iso) return cmd_iso(cfg);
    if (*sigma) return cmd_sigma(cfg);
    if (*m12) return cmd_m12(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
