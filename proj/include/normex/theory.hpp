#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "normex/literal.hpp"

namespace normex {

enum class RuleKind { strict, defeasible, defeater };

std::string to_string(RuleKind k);

struct Rule {
  std::string label;
  RuleKind kind = RuleKind::defeasible;
  std::vector<Literal> antecedents;  // kept sorted and deduplicated
  Literal consequent;

  friend bool operator==(const Rule&, const Rule&) = default;
};

Rule make_rule(std::string label, RuleKind kind, std::vector<Literal> antecedents,
               Literal consequent);

struct DefeasibleTheory {
  std::vector<Literal> facts;  // declaration order, no duplicates
  std::vector<Rule> rules;     // declaration order, labels unique
  std::vector<std::pair<std::string, std::string>> superiority;  // (stronger, weaker)

  const Rule* rule(const std::string& label) const;
  std::vector<int> rules_for(const Literal& l) const;     // R[l], rule indices
  std::vector<int> rules_for_sd(const Literal& l) const;  // R_sd[l]: strict + defeasible
  bool has_fact(const Literal& l) const;
  bool is_superior(const std::string& stronger, const std::string& weaker) const;

  // Lit(D): every literal occurring in facts, antecedents or consequents.
  std::set<Literal> occurring_literals() const;
  std::set<std::string> occurring_atoms() const;
};

// Order-insensitive comparison: facts, rules and superiority as sets.
bool structurally_equal(const DefeasibleTheory& a, const DefeasibleTheory& b);

enum class ViolationKind {
  inconsistent_facts,
  fact_concluded_by_rule,
  non_defeasible_rule,
  dangling_superiority,
  duplicate_rule_label,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationResult;

// A defeasible theory satisfying the argumentation restrictions: only
// defeasible rules, consistent facts, and no fact (or its complement)
// concluded by any rule.
class ArgumentationTheory {
 public:
  static ValidationResult validate(DefeasibleTheory t);

  const DefeasibleTheory& theory() const { return t_; }
  const std::vector<Literal>& facts() const { return t_.facts; }
  const std::vector<Rule>& rules() const { return t_.rules; }

 private:
  explicit ArgumentationTheory(DefeasibleTheory t) : t_(std::move(t)) {}
  DefeasibleTheory t_;
};

struct ValidationResult {
  std::optional<ArgumentationTheory> theory;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

}  // namespace normex
