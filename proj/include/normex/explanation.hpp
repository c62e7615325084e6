#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "normex/argumentation.hpp"

namespace normex {

enum class ExplanationMode { literal, support_closed };

std::string to_string(ExplanationMode m);
std::optional<ExplanationMode> explanation_mode_from_string(const std::string& s);

struct Explanation {
  Literal target;
  std::set<std::string> argument_ids;  // canonical ids, stable across frameworks
  ExplanationMode mode = ExplanationMode::support_closed;

  friend bool operator==(const Explanation&, const Explanation&) = default;
};

// Lit(R): both polarities of every literal that occurs in some antecedent
// and is concluded (in either polarity) by no rule.
struct FactUniverse {
  std::set<Literal> literals;
};

FactUniverse literal_universe(const std::vector<Rule>& rules);

// All subset-minimal argument sets that render some justified argument for
// the target acceptable (plus support closure in support_closed mode).
// Empty iff the target is not justified.
std::vector<Explanation> find_explanations(const ArgumentationTheory& t,
                                           const Literal& target,
                                           ExplanationMode mode,
                                           AttackMode attack = AttackMode::defeat);

// Same search on a prebuilt (possibly filtered) framework.
std::vector<std::set<int>> find_explanation_sets(const FrameworkView& v,
                                                 const Literal& target,
                                                 ExplanationMode mode);

// Every consistent F' with F subseteq F' subseteq F ∪ universe, deduplicated,
// ordered by size then lexicographically.
std::vector<std::set<Literal>> enumerate_fact_supersets(const std::set<Literal>& facts,
                                                        const FactUniverse& universe);

struct StabilityReport {
  bool stable = false;
  std::size_t checked_supersets = 0;
  std::optional<std::set<Literal>> counterexample;
};

// Decides stability by enumerating consistent fact supersets within Lit(R);
// reuses one shared argument universe across supersets. Throws
// NotAnExplanation when `e` is not an explanation for its target in AF(t).
StabilityReport is_stable(const ArgumentationTheory& t, const Explanation& e);

}  // namespace normex
