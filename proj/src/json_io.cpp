#include "normex/json_io.hpp"

#include <algorithm>

namespace normex {

Json literals_json(const std::set<Literal>& lits) {
  Json arr = Json::array();
  for (const auto& l : lits) arr.push_back(to_string(l));
  return arr;
}

Json validation_json(const std::vector<Violation>& violations) {
  Json out;
  out["valid"] = violations.empty();
  Json arr = Json::array();
  for (const auto& v : violations)
    arr.push_back({{"code", to_string(v.kind)}, {"detail", v.detail}});
  out["violations"] = arr;
  return out;
}

Json extension_json(const Extension& e) {
  Json out;
  out["plus_delta"] = literals_json(e.plus_delta);
  out["minus_delta"] = literals_json(e.minus_delta);
  out["plus_partial"] = literals_json(e.plus_partial);
  out["minus_partial"] = literals_json(e.minus_partial);
  return out;
}

Json arguments_json(const Framework& fw) {
  Json arr = Json::array();
  const auto& t = fw.theory();
  for (int i = 0; i < static_cast<int>(fw.arguments().size()); ++i) {
    const Argument& a = fw.arguments()[i];
    Json j;
    j["name"] = fw.display_name(i);
    j["id"] = a.canonical;
    j["conclusion"] = to_string(a.conclusion);
    if (a.rule)
      j["top_rule"] = t.rules[*a.rule].label;
    else
      j["top_rule"] = nullptr;
    Json subs = Json::array();
    for (int c : a.children) subs.push_back(fw.display_name(c));
    j["subarguments"] = subs;
    arr.push_back(std::move(j));
  }
  Json out;
  out["arguments"] = arr;
  Json attacks = Json::array();
  for (const auto& [a, b] : fw.attacks())
    attacks.push_back(Json::array({fw.display_name(a), fw.display_name(b)}));
  out["attacks"] = attacks;
  return out;
}

Json justification_json(const Framework& fw, const JustificationResult& jr) {
  Json out;
  Json j = Json::array(), r = Json::array();
  for (int a : jr.justified) j.push_back(fw.display_name(a));
  for (int a : jr.rejected) r.push_back(fw.display_name(a));
  out["justified"] = j;
  out["rejected"] = r;
  out["justified_conclusions"] = literals_json(jr.justified_conclusions);
  return out;
}

std::vector<std::string> display_ids(const Framework& fw, const Explanation& e) {
  std::vector<int> idx;
  for (const auto& id : e.argument_ids) {
    auto i = fw.by_canonical(id);
    if (i) idx.push_back(*i);
  }
  std::sort(idx.begin(), idx.end());
  std::vector<std::string> out;
  for (int i : idx) out.push_back(fw.display_name(i));
  return out;
}

Json explanations_json(const Framework& fw, const Literal& target,
                       ExplanationMode mode, const std::vector<Explanation>& es) {
  Json out;
  out["target"] = to_string(target);
  out["mode"] = to_string(mode);
  Json arr = Json::array();
  for (const auto& e : es) {
    Json one = Json::array();
    for (const auto& name : display_ids(fw, e)) one.push_back(name);
    arr.push_back(std::move(one));
  }
  out["explanations"] = arr;
  return out;
}

Json stability_json(const Framework& fw, const Explanation& e,
                    const StabilityReport& r) {
  Json out;
  out["target"] = to_string(e.target);
  Json ids = Json::array();
  for (const auto& name : display_ids(fw, e)) ids.push_back(name);
  out["explanation"] = ids;
  out["mode"] = to_string(e.mode);
  out["stable"] = r.stable;
  out["supersets_checked"] = r.checked_supersets;
  if (r.counterexample)
    out["counterexample"] = literals_json(*r.counterexample);
  else
    out["counterexample"] = nullptr;
  return out;
}

Json model_json(const SubModel& m) {
  Json out;
  Json worlds = Json::array();
  for (const auto& w : m.worlds) {
    Json lits = Json::array();
    for (const auto& l : w) lits.push_back(to_string(l));
    worlds.push_back(std::move(lits));
  }
  out["worlds"] = worlds;
  Json nbhd = Json::array();
  for (const auto& fam : m.neighborhoods) {
    Json f = Json::array();
    for (const auto& member : fam) {
      Json idxs = Json::array();
      for (int i : member) idxs.push_back(i);
      f.push_back(std::move(idxs));
    }
    nbhd.push_back(std::move(f));
  }
  out["neighborhoods"] = nbhd;
  return out;
}

Json parse_errors_json(const std::vector<ParseError>& errors) {
  Json arr = Json::array();
  for (const auto& e : errors) {
    Json j;
    j["line"] = e.span.line;
    j["column"] = e.span.column;
    j["length"] = e.span.length;
    j["message"] = e.message;
    Json exp = Json::array();
    for (const auto& x : e.expected) exp.push_back(x);
    j["expected"] = exp;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace normex
