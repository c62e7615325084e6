#include "normex/theory.hpp"

#include <algorithm>

namespace normex {

std::string to_string(RuleKind k) {
  switch (k) {
    case RuleKind::strict: return "strict";
    case RuleKind::defeasible: return "defeasible";
    case RuleKind::defeater: return "defeater";
  }
  return "?";
}

Rule make_rule(std::string label, RuleKind kind, std::vector<Literal> antecedents,
               Literal consequent) {
  std::sort(antecedents.begin(), antecedents.end());
  antecedents.erase(std::unique(antecedents.begin(), antecedents.end()),
                    antecedents.end());
  return Rule{std::move(label), kind, std::move(antecedents), std::move(consequent)};
}

const Rule* DefeasibleTheory::rule(const std::string& label) const {
  for (const auto& r : rules)
    if (r.label == label) return &r;
  return nullptr;
}

std::vector<int> DefeasibleTheory::rules_for(const Literal& l) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(rules.size()); ++i)
    if (rules[i].consequent == l) out.push_back(i);
  return out;
}

std::vector<int> DefeasibleTheory::rules_for_sd(const Literal& l) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(rules.size()); ++i)
    if (rules[i].consequent == l && rules[i].kind != RuleKind::defeater)
      out.push_back(i);
  return out;
}

bool DefeasibleTheory::has_fact(const Literal& l) const {
  return std::find(facts.begin(), facts.end(), l) != facts.end();
}

bool DefeasibleTheory::is_superior(const std::string& stronger,
                                   const std::string& weaker) const {
  for (const auto& [a, b] : superiority)
    if (a == stronger && b == weaker) return true;
  return false;
}

std::set<Literal> DefeasibleTheory::occurring_literals() const {
  std::set<Literal> out(facts.begin(), facts.end());
  for (const auto& r : rules) {
    out.insert(r.antecedents.begin(), r.antecedents.end());
    out.insert(r.consequent);
  }
  return out;
}

std::set<std::string> DefeasibleTheory::occurring_atoms() const {
  std::set<std::string> out;
  for (const auto& l : occurring_literals()) out.insert(l.atom);
  return out;
}

bool structurally_equal(const DefeasibleTheory& a, const DefeasibleTheory& b) {
  std::set<Literal> fa(a.facts.begin(), a.facts.end());
  std::set<Literal> fb(b.facts.begin(), b.facts.end());
  if (fa != fb) return false;
  auto rule_key = [](const Rule& r) {
    return std::tuple(r.label, r.kind, r.antecedents, r.consequent);
  };
  std::set<std::tuple<std::string, RuleKind, std::vector<Literal>, Literal>> ra, rb;
  for (const auto& r : a.rules) ra.insert(rule_key(r));
  for (const auto& r : b.rules) rb.insert(rule_key(r));
  if (ra != rb) return false;
  std::set<std::pair<std::string, std::string>> sa(a.superiority.begin(),
                                                   a.superiority.end());
  std::set<std::pair<std::string, std::string>> sb(b.superiority.begin(),
                                                   b.superiority.end());
  return sa == sb;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::inconsistent_facts: return "InconsistentFacts";
    case ViolationKind::fact_concluded_by_rule: return "FactConcludedByRule";
    case ViolationKind::non_defeasible_rule: return "NonDefeasibleRule";
    case ViolationKind::dangling_superiority: return "DanglingSuperiority";
    case ViolationKind::duplicate_rule_label: return "DuplicateRuleLabel";
  }
  return "?";
}

ValidationResult ArgumentationTheory::validate(DefeasibleTheory t) {
  std::vector<Violation> issues;

  std::set<std::string> labels;
  for (const auto& r : t.rules) {
    if (!labels.insert(r.label).second)
      issues.push_back({ViolationKind::duplicate_rule_label, r.label});
    if (r.kind != RuleKind::defeasible)
      issues.push_back({ViolationKind::non_defeasible_rule,
                        r.label + " is " + to_string(r.kind)});
  }

  std::set<Literal> fact_set(t.facts.begin(), t.facts.end());
  for (const auto& f : fact_set) {
    if (fact_set.count(complement(f)) && f.positive)
      issues.push_back({ViolationKind::inconsistent_facts,
                        to_string(f) + " and " + to_string(complement(f))});
    if (!t.rules_for(f).empty() || !t.rules_for(complement(f)).empty())
      issues.push_back({ViolationKind::fact_concluded_by_rule, to_string(f)});
  }

  for (const auto& [a, b] : t.superiority) {
    if (!t.rule(a)) issues.push_back({ViolationKind::dangling_superiority, a});
    if (!t.rule(b)) issues.push_back({ViolationKind::dangling_superiority, b});
  }

  ValidationResult res;
  res.violations = std::move(issues);
  if (res.violations.empty()) res.theory = ArgumentationTheory(std::move(t));
  return res;
}

}  // namespace normex
