#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "normex/cli.hpp"
#include "normex/dot.hpp"
#include "normex/errors.hpp"
#include "normex/generator.hpp"
#include "normex/graph.hpp"
#include "normex/json_io.hpp"

namespace py = pybind11;
using namespace normex;

namespace {

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

DefeasibleTheory parse_or_throw(const std::string& text) {
  ParseResult pr = parse_theory(text);
  if (!pr.ok()) {
    std::ostringstream msg;
    for (const auto& e : pr.errors)
      msg << e.span.line << ":" << e.span.column << ": " << e.message << "\n";
    throw py::value_error(msg.str());
  }
  return pr.theory;
}

ArgumentationTheory validate_or_throw(const DefeasibleTheory& t) {
  auto res = ArgumentationTheory::validate(t);
  if (!res.ok()) {
    std::ostringstream msg;
    for (const auto& v : res.violations)
      msg << to_string(v.kind) << ": " << v.detail << "\n";
    throw py::value_error(msg.str());
  }
  return *res.theory;
}

Literal literal_or_throw(const std::string& s) {
  auto l = parse_literal_text(s);
  if (!l) throw py::value_error("not a literal: " + s);
  return *l;
}

ExplanationMode mode_or_throw(const std::string& s) {
  auto m = explanation_mode_from_string(s);
  if (!m) throw py::value_error("unknown explanation mode: " + s);
  return *m;
}

AttackMode attack_or_throw(const std::string& s) {
  auto m = attack_mode_from_string(s);
  if (!m) throw py::value_error("unknown attack mode: " + s);
  return *m;
}

Explanation first_explanation(const ArgumentationTheory& at, const Literal& target,
                              ExplanationMode mode) {
  auto es = find_explanations(at, target, mode);
  if (es.empty())
    throw py::value_error("no explanation for " + to_string(target));
  return es.front();
}

}  // namespace

PYBIND11_MODULE(_normex, m) {
  m.doc() = "defeasible logic, normative explanations and deontic neighborhood models";

  py::class_<DefeasibleTheory>(m, "Theory")
      .def_static("parse", &parse_or_throw, py::arg("text"))
      .def("serialize", [](const DefeasibleTheory& t) { return serialize_theory(t); })
      .def_property_readonly("facts",
                             [](const DefeasibleTheory& t) {
                               std::vector<std::string> out;
                               for (const auto& f : t.facts)
                                 out.push_back(to_string(f));
                               return out;
                             })
      .def_property_readonly("rule_labels",
                             [](const DefeasibleTheory& t) {
                               std::vector<std::string> out;
                               for (const auto& r : t.rules) out.push_back(r.label);
                               return out;
                             })
      .def("__eq__",
           [](const DefeasibleTheory& a, const DefeasibleTheory& b) {
             return structurally_equal(a, b);
           })
      .def("__repr__", [](const DefeasibleTheory& t) {
        return "<Theory facts=" + std::to_string(t.facts.size()) +
               " rules=" + std::to_string(t.rules.size()) + ">";
      });

  m.def("validate", [](const DefeasibleTheory& t) {
    auto res = ArgumentationTheory::validate(t);
    return to_py(validation_json(res.violations));
  });

  m.def("is_acyclic_setup",
        [](const DefeasibleTheory& t) { return is_acyclic_setup(t); });

  m.def("dependency_graph", [](const DefeasibleTheory& t) {
    DependencyGraph g = dependency_graph(t);
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back(v);
    j["edges"] = Json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back(Json::array({a, b}));
    return to_py(j);
  });

  m.def("extension", [](const DefeasibleTheory& t) {
    return to_py(extension_json(compute_extension(t)));
  });

  m.def("d_extension", [](const DefeasibleTheory& t) {
    auto at = validate_or_throw(t);
    std::vector<std::string> out;
    for (const auto& l : d_extension(at).literals) out.push_back(to_string(l));
    return out;
  });

  m.def(
      "arguments",
      [](const DefeasibleTheory& t, const std::string& attack) {
        auto at = validate_or_throw(t);
        Framework fw = Framework::build(at, attack_or_throw(attack));
        return to_py(arguments_json(fw));
      },
      py::arg("theory"), py::arg("attack") = "defeat");

  m.def(
      "justify",
      [](const DefeasibleTheory& t, const std::string& attack) {
        auto at = validate_or_throw(t);
        Framework fw = Framework::build(at, attack_or_throw(attack));
        return to_py(justification_json(fw, compute_justification(fw)));
      },
      py::arg("theory"), py::arg("attack") = "defeat");

  m.def(
      "theorem2_check",
      [](const DefeasibleTheory& t) { return theorem2_check(validate_or_throw(t)); },
      py::arg("theory"));

  m.def(
      "explanations",
      [](const DefeasibleTheory& t, const std::string& target,
         const std::string& mode) {
        auto at = validate_or_throw(t);
        Literal lit = literal_or_throw(target);
        ExplanationMode em = mode_or_throw(mode);
        Framework fw = Framework::build(at);
        return to_py(
            explanations_json(fw, lit, em, find_explanations(at, lit, em)));
      },
      py::arg("theory"), py::arg("target"), py::arg("mode") = "closed");

  m.def(
      "stable",
      [](const DefeasibleTheory& t, const std::string& target,
         const std::string& mode) {
        auto at = validate_or_throw(t);
        Literal lit = literal_or_throw(target);
        Explanation e = first_explanation(at, lit, mode_or_throw(mode));
        Framework fw = Framework::build(at);
        return to_py(stability_json(fw, e, is_stable(at, e)));
      },
      py::arg("theory"), py::arg("target"), py::arg("mode") = "closed");

  m.def(
      "model",
      [](const DefeasibleTheory& t, int world_cap) {
        auto at = validate_or_throw(t);
        DeonticModel dm = DeonticModel::build(at, world_cap);
        Json out;
        out["extension"] = Json::array();
        for (const auto& l : dm.extension())
          out["extension"].push_back(to_string(l));
        Json mj = model_json(materialize(dm));
        out["worlds"] = mj["worlds"];
        out["neighborhoods"] = mj["neighborhoods"];
        return to_py(out);
      },
      py::arg("theory"), py::arg("world_cap") = DeonticModel::kDefaultWorldCap);

  m.def(
      "eval_formula",
      [](const DefeasibleTheory& t, const std::string& formula, int world_cap) {
        auto at = validate_or_throw(t);
        auto f = parse_formula(formula);
        if (!f) throw py::value_error("cannot parse formula: " + formula);
        DeonticModel dm = DeonticModel::build(at, world_cap);
        if (dm.world_count() == 0) throw py::value_error("model has no worlds");
        Json out;
        out["formula"] = to_string(*f);
        out["value_at_extension_world"] = dm.holds(dm.full_world(), *f);
        out["true_world_count"] = dm.truth_set(*f).size();
        out["world_count"] = dm.world_count();
        return to_py(out);
      },
      py::arg("theory"), py::arg("formula"),
      py::arg("world_cap") = DeonticModel::kDefaultWorldCap);

  m.def(
      "submodel",
      [](const DefeasibleTheory& t, const std::string& target,
         const std::string& mode, int world_cap) {
        auto at = validate_or_throw(t);
        Literal lit = literal_or_throw(target);
        Explanation e = first_explanation(at, lit, mode_or_throw(mode));
        DeonticModel dm = DeonticModel::build(at, world_cap);
        return to_py(model_json(explanation_submodel(dm, e)));
      },
      py::arg("theory"), py::arg("target"), py::arg("mode") = "closed",
      py::arg("world_cap") = DeonticModel::kDefaultWorldCap);

  m.def(
      "semantic_stability",
      [](const DefeasibleTheory& t, const std::string& target,
         const std::string& mode, int world_cap) {
        auto at = validate_or_throw(t);
        Literal lit = literal_or_throw(target);
        Explanation e = first_explanation(at, lit, mode_or_throw(mode));
        SemanticStabilityResult res = semantic_stability_check(at, e, world_cap);
        Json out;
        out["holds"] = res.holds;
        out["explanation_in_d_plus"] = res.explanation_in_d_plus;
        out["submodels_equal"] = res.submodels_equal;
        out["f_plus"] = literals_json(res.f_plus);
        return to_py(out);
      },
      py::arg("theory"), py::arg("target"), py::arg("mode") = "closed",
      py::arg("world_cap") = DeonticModel::kDefaultWorldCap);

  m.def(
      "generate",
      [](std::uint64_t seed, int atoms, int rules, int facts, int free_atoms,
         int max_body) {
        GenParams p;
        p.seed = seed;
        p.atoms = atoms;
        p.rules = rules;
        p.fact_atoms = facts;
        p.free_fact_atoms = free_atoms;
        p.max_body = max_body;
        return generate_theory(p);
      },
      py::arg("seed") = 0, py::arg("atoms") = 6, py::arg("rules") = 8,
      py::arg("facts") = 2, py::arg("free_atoms") = 0, py::arg("max_body") = 2);

  m.def("framework_dot", [](const DefeasibleTheory& t) {
    return export_dot(Framework::build(validate_or_throw(t)));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

  static py::exception<Error> exc(m, "ReasoningError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      exc(e.what());
    }
  });
}
