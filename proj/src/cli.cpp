#include "normex/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "normex/dot.hpp"
#include "normex/errors.hpp"
#include "normex/generator.hpp"
#include "normex/graph.hpp"
#include "normex/json_io.hpp"

namespace normex {

namespace {

struct CliState {
  std::string input_path;
  std::string output_path;
  std::string mode_str = "closed";
  std::string attack_str = "defeat";
  int world_cap = DeonticModel::kDefaultWorldCap;
  bool json = false;
  bool dot = false;
  GenParams gen;

  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  std::ofstream file_out;

  std::ostream& sink() {
    if (!output_path.empty()) {
      if (!file_out.is_open()) file_out.open(output_path);
      return file_out;
    }
    return *out;
  }
};

int fail_input(CliState& st, const std::string& msg) {
  (*st.err) << "error: " << msg << "\n";
  return 2;
}

int fail_semantic(CliState& st, const std::string& msg) {
  (*st.err) << "refused: " << msg << "\n";
  return 1;
}

std::optional<DefeasibleTheory> load_theory(CliState& st, int& code) {
  std::ifstream in(st.input_path);
  if (!in) {
    code = fail_input(st, "cannot read " + st.input_path);
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  ParseResult pr = parse_theory(buf.str());
  if (!pr.ok()) {
    if (st.json) {
      (*st.err) << parse_errors_json(pr.errors).dump(2) << "\n";
    } else {
      for (const auto& e : pr.errors)
        (*st.err) << st.input_path << ":" << e.span.line << ":" << e.span.column
                  << ": " << e.message << "\n";
    }
    code = 2;
    return std::nullopt;
  }
  return pr.theory;
}

std::optional<ArgumentationTheory> load_validated(CliState& st, int& code) {
  auto t = load_theory(st, code);
  if (!t) return std::nullopt;
  auto res = ArgumentationTheory::validate(std::move(*t));
  if (!res.ok()) {
    if (st.json) {
      (*st.err) << validation_json(res.violations).dump(2) << "\n";
    } else {
      for (const auto& v : res.violations)
        (*st.err) << to_string(v.kind) << ": " << v.detail << "\n";
    }
    code = 2;
    return std::nullopt;
  }
  return std::move(res.theory);
}

std::string join_literals(const std::set<Literal>& lits) {
  std::string s;
  for (const auto& l : lits) {
    if (!s.empty()) s += ", ";
    s += to_string(l);
  }
  return s;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

AttackMode attack_of(const CliState& st) {
  return *attack_mode_from_string(st.attack_str);
}

ExplanationMode mode_of(const CliState& st) {
  return *explanation_mode_from_string(st.mode_str);
}

int cmd_validate(CliState& st) {
  int code = 0;
  auto t = load_theory(st, code);
  if (!t) return code;
  if (st.dot) {
    st.sink() << export_dot(dependency_graph(*t));
    return 0;
  }
  auto res = ArgumentationTheory::validate(*t);
  if (st.json) {
    st.sink() << validation_json(res.violations).dump(2) << "\n";
  } else if (res.ok()) {
    st.sink() << "valid argumentation theory\n";
  } else {
    for (const auto& v : res.violations)
      st.sink() << to_string(v.kind) << ": " << v.detail << "\n";
  }
  return res.ok() ? 0 : 2;
}

int cmd_extension(CliState& st) {
  int code = 0;
  auto t = load_theory(st, code);
  if (!t) return code;
  Extension e = compute_extension(*t);
  if (st.json) {
    st.sink() << extension_json(e).dump(2) << "\n";
  } else {
    st.sink() << "+Delta: " << join_literals(e.plus_delta) << "\n"
              << "-Delta: " << join_literals(e.minus_delta) << "\n"
              << "+partial: " << join_literals(e.plus_partial) << "\n"
              << "-partial: " << join_literals(e.minus_partial) << "\n";
  }
  return 0;
}

int cmd_arguments(CliState& st) {
  int code = 0;
  auto at = load_validated(st, code);
  if (!at) return code;
  Framework fw = Framework::build(*at, attack_of(st));
  if (st.dot) {
    st.sink() << export_dot(fw);
    return 0;
  }
  if (st.json) {
    st.sink() << arguments_json(fw).dump(2) << "\n";
    return 0;
  }
  const auto& t = fw.theory();
  for (int i = 0; i < static_cast<int>(fw.arguments().size()); ++i) {
    const Argument& a = fw.arguments()[i];
    st.sink() << fw.display_name(i) << ": " << to_string(a.conclusion);
    if (a.rule) {
      st.sink() << " (rule " << t.rules[*a.rule].label;
      if (!a.children.empty()) {
        st.sink() << ", from ";
        for (std::size_t c = 0; c < a.children.size(); ++c) {
          if (c) st.sink() << ", ";
          st.sink() << fw.display_name(a.children[c]);
        }
      }
      st.sink() << ")";
    } else {
      st.sink() << " (fact)";
    }
    st.sink() << "\n";
  }
  for (const auto& [a, b] : fw.attacks())
    st.sink() << fw.display_name(a) << " -> " << fw.display_name(b) << "\n";
  return 0;
}

int cmd_justify(CliState& st) {
  int code = 0;
  auto at = load_validated(st, code);
  if (!at) return code;
  Framework fw = Framework::build(*at, attack_of(st));
  JustificationResult jr = compute_justification(fw);
  if (st.json) {
    st.sink() << justification_json(fw, jr).dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> j, r;
  for (int a : jr.justified) j.push_back(fw.display_name(a));
  for (int a : jr.rejected) r.push_back(fw.display_name(a));
  st.sink() << "justified: " << join_names(j) << "\n"
            << "rejected: " << join_names(r) << "\n"
            << "justified conclusions: " << join_literals(jr.justified_conclusions)
            << "\n";
  return 0;
}

int cmd_explain(CliState& st, const Literal& target) {
  int code = 0;
  auto at = load_validated(st, code);
  if (!at) return code;
  Framework fw = Framework::build(*at, attack_of(st));
  auto es = find_explanations(*at, target, mode_of(st), attack_of(st));
  if (st.json) {
    st.sink() << explanations_json(fw, target, mode_of(st), es).dump(2) << "\n";
    return 0;
  }
  if (es.empty()) {
    st.sink() << "no explanation: " << to_string(target) << " is not justified\n";
    return 0;
  }
  for (const auto& e : es)
    st.sink() << "{" << join_names(display_ids(fw, e)) << "}\n";
  return 0;
}

int cmd_stable(CliState& st, const Literal& target) {
  int code = 0;
  auto at = load_validated(st, code);
  if (!at) return code;
  auto es = find_explanations(*at, target, mode_of(st), attack_of(st));
  if (es.empty())
    return fail_semantic(st, "no explanation for " + to_string(target));
  Framework fw = Framework::build(*at, attack_of(st));
  StabilityReport rep = is_stable(*at, es.front());
  if (st.json) {
    st.sink() << stability_json(fw, es.front(), rep).dump(2) << "\n";
    return 0;
  }
  st.sink() << "explanation: {" << join_names(display_ids(fw, es.front())) << "}\n"
            << "stable: " << (rep.stable ? "true" : "false") << "\n"
            << "supersets checked: " << rep.checked_supersets << "\n";
  if (rep.counterexample)
    st.sink() << "counterexample: {" << join_literals(*rep.counterexample) << "}\n";
  return 0;
}

int cmd_model(CliState& st) {
  int code = 0;
  auto at = load_validated(st, code);
  if (!at) return code;
  DeonticModel m = DeonticModel::build(*at, st.world_cap);
  if (st.json) {
    SubModel sub = materialize(m);
    Json j = model_json(sub);
    Json ext = Json::array();
    for (const auto& l : m.extension()) ext.push_back(to_string(l));
    Json out;
    out["extension"] = ext;
    out["worlds"] = j["worlds"];
    out["neighborhoods"] = j["neighborhoods"];
    st.sink() << out.dump(2) << "\n";
    return 0;
  }
  std::set<Literal> ext(m.extension().begin(), m.extension().end());
  st.sink() << "extension: " << join_literals(ext) << "\n"
            << "worlds: " << m.world_count() << "\n";
  WorldMask w = m.full_world();
  st.sink() << "N(E(D)): ";
  bool first = true;
  if (m.neighborhood_has_empty(w)) {
    st.sink() << "{}";
    first = false;
  }
  for (int c = 0; c < static_cast<int>(m.classes().size()); ++c) {
    if (!m.class_fired(w, c) || !m.literal_bit(m.classes()[c])) continue;
    if (!first) st.sink() << ", ";
    st.sink() << "||" << to_string(m.classes()[c]) << "||";
    first = false;
  }
  if (first) st.sink() << "(empty family)";
  st.sink() << "\n";
  return 0;
}

int cmd_eval(CliState& st, const Formula& f) {
  int code = 0;
  auto at = load_validated(st, code);
  if (!at) return code;
  DeonticModel m = DeonticModel::build(*at, st.world_cap);
  if (m.world_count() == 0)
    return fail_semantic(st, "model has no worlds (empty extension)");
  bool at_full = m.holds(m.full_world(), f);
  auto ts = m.truth_set(f);
  if (st.json) {
    Json out;
    out["formula"] = to_string(f);
    out["value_at_extension_world"] = at_full;
    out["true_world_count"] = ts.size();
    out["world_count"] = m.world_count();
    st.sink() << out.dump(2) << "\n";
    return 0;
  }
  st.sink() << to_string(f) << " at E(D): " << (at_full ? "true" : "false")
            << " (true at " << ts.size() << " of " << m.world_count()
            << " worlds)\n";
  return 0;
}

int cmd_submodel(CliState& st, const Literal& target) {
  int code = 0;
  auto at = load_validated(st, code);
  if (!at) return code;
  auto es = find_explanations(*at, target, mode_of(st), attack_of(st));
  if (es.empty())
    return fail_semantic(st, "no explanation for " + to_string(target));
  DeonticModel m = DeonticModel::build(*at, st.world_cap);
  SubModel sub = explanation_submodel(m, es.front());
  Framework fw = Framework::build(*at, attack_of(st));
  if (st.json) {
    Json out;
    out["target"] = to_string(target);
    Json ids = Json::array();
    for (const auto& n : display_ids(fw, es.front())) ids.push_back(n);
    out["explanation"] = ids;
    Json mj = model_json(sub);
    out["worlds"] = mj["worlds"];
    out["neighborhoods"] = mj["neighborhoods"];
    st.sink() << out.dump(2) << "\n";
    return 0;
  }
  st.sink() << "explanation: {" << join_names(display_ids(fw, es.front())) << "}\n"
            << "submodel worlds: " << sub.worlds.size() << " (of "
            << m.world_count() << ")\n";
  return 0;
}

int cmd_stable_sem(CliState& st, const Literal& target) {
  int code = 0;
  auto at = load_validated(st, code);
  if (!at) return code;
  auto es = find_explanations(*at, target, mode_of(st), attack_of(st));
  if (es.empty())
    return fail_semantic(st, "no explanation for " + to_string(target));
  SemanticStabilityResult res = semantic_stability_check(*at, es.front(), st.world_cap);
  Framework fw = Framework::build(*at, attack_of(st));
  if (st.json) {
    Json out;
    out["target"] = to_string(target);
    Json ids = Json::array();
    for (const auto& n : display_ids(fw, es.front())) ids.push_back(n);
    out["explanation"] = ids;
    out["holds"] = res.holds;
    out["explanation_in_d_plus"] = res.explanation_in_d_plus;
    out["submodels_equal"] = res.submodels_equal;
    out["f_plus"] = literals_json(res.f_plus);
    st.sink() << out.dump(2) << "\n";
    return 0;
  }
  st.sink() << "holds: " << (res.holds ? "true" : "false") << "\n"
            << "explanation in AF(D+): "
            << (res.explanation_in_d_plus ? "true" : "false") << "\n"
            << "submodels equal: " << (res.submodels_equal ? "true" : "false")
            << "\n"
            << "F+: {" << join_literals(res.f_plus) << "}\n";
  return 0;
}

int cmd_gen(CliState& st) {
  DefeasibleTheory t = generate_theory(st.gen);
  st.sink() << serialize_theory(t);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliState st;
  st.out = &out;
  st.err = &err;

  CLI::App app{"defeasible logic, normative explanations and deontic neighborhood models"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_file = true) {
    if (with_file)
      sub->add_option("file", st.input_path, "theory file (.dfl)")->required();
    sub->add_flag("--json", st.json, "JSON output");
    sub->add_option("--output", st.output_path, "write output to a file");
    return sub;
  };
  auto add_framework_opts = [&](CLI::App* sub) {
    sub->add_option("--attack", st.attack_str, "attack mode")
        ->check(CLI::IsMember({"defeat", "superior-only", "ignore"}));
    return sub;
  };
  auto add_mode_opt = [&](CLI::App* sub) {
    sub->add_option("--mode", st.mode_str, "explanation mode")
        ->check(CLI::IsMember({"literal", "closed"}));
    return sub;
  };
  auto add_cap_opt = [&](CLI::App* sub) {
    sub->add_option("--world-cap", st.world_cap, "max |E(D)| for model building");
    return sub;
  };

  CLI::App* validate = add_common(app.add_subcommand("validate", "validate an argumentation theory"));
  validate->add_flag("--dot", st.dot, "emit the dependency graph as DOT");
  CLI::App* extension = add_common(app.add_subcommand("extension", "compute the theory extension"));
  CLI::App* arguments = add_framework_opts(add_common(app.add_subcommand("arguments", "build the argumentation framework")));
  arguments->add_flag("--dot", st.dot, "emit the framework as DOT");
  CLI::App* justify = add_framework_opts(add_common(app.add_subcommand("justify", "justified and rejected arguments")));
  CLI::App* explain = add_mode_opt(add_framework_opts(add_common(app.add_subcommand("explain", "minimal normative explanations for a literal"))));
  explain->allow_extras();
  CLI::App* stable = add_mode_opt(add_framework_opts(add_common(app.add_subcommand("stable", "stability of the explanation for a literal"))));
  stable->allow_extras();
  CLI::App* model = add_cap_opt(add_common(app.add_subcommand("model", "build the neighborhood D-model")));
  CLI::App* eval = add_cap_opt(add_common(app.add_subcommand("eval", "evaluate a formula in the D-model")));
  eval->allow_extras();
  CLI::App* submodel = add_cap_opt(add_mode_opt(add_framework_opts(add_common(app.add_subcommand("submodel", "explanation submodel for a literal")))));
  submodel->allow_extras();
  CLI::App* stable_sem = add_cap_opt(add_mode_opt(add_framework_opts(add_common(app.add_subcommand("stable-sem", "semantic stability check for a literal")))));
  stable_sem->allow_extras();
  CLI::App* gen = app.add_subcommand("gen", "generate a random acyclic theory");
  gen->add_flag("--json", st.json, "ignored; gen always emits .dfl text");
  gen->add_option("--output", st.output_path, "write output to a file");
  gen->add_option("--seed", st.gen.seed, "random seed");
  gen->add_option("--atoms", st.gen.atoms, "atom budget");
  gen->add_option("--rules", st.gen.rules, "rule budget");
  gen->add_option("--facts", st.gen.fact_atoms, "fact atoms");
  gen->add_option("--free-atoms", st.gen.free_fact_atoms, "antecedent-only atoms outside the fact set");
  gen->add_option("--max-body", st.gen.max_body, "max antecedents per rule");

  std::vector<const char*> argv;
  argv.push_back("normex");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto extra_literal = [&](CLI::App* sub) -> std::optional<Literal> {
    auto rem = sub->remaining();
    if (rem.size() != 1) return std::nullopt;
    return parse_literal_text(rem[0]);
  };

  try {
    if (*validate) return cmd_validate(st);
    if (*extension) return cmd_extension(st);
    if (*arguments) return cmd_arguments(st);
    if (*justify) return cmd_justify(st);
    if (*explain) {
      auto l = extra_literal(explain);
      if (!l) return fail_input(st, "explain expects one target literal");
      return cmd_explain(st, *l);
    }
    if (*stable) {
      auto l = extra_literal(stable);
      if (!l) return fail_input(st, "stable expects one target literal");
      return cmd_stable(st, *l);
    }
    if (*model) return cmd_model(st);
    if (*eval) {
      auto rem = eval->remaining();
      std::string text;
      for (const auto& r : rem) {
        if (!text.empty()) text += " ";
        text += r;
      }
      auto f = parse_formula(text);
      if (!f) return fail_input(st, "cannot parse formula '" + text + "'");
      return cmd_eval(st, *f);
    }
    if (*submodel) {
      auto l = extra_literal(submodel);
      if (!l) return fail_input(st, "submodel expects one target literal");
      return cmd_submodel(st, *l);
    }
    if (*stable_sem) {
      auto l = extra_literal(stable_sem);
      if (!l) return fail_input(st, "stable-sem expects one target literal");
      return cmd_stable_sem(st, *l);
    }
    if (*gen) return cmd_gen(st);
  } catch (const Error& e) {
    return fail_semantic(st, e.what());
  }
  return 2;
}

}  // namespace normex
