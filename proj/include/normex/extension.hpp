#pragma once

#include <set>
#include <utility>
#include <vector>

#include "normex/theory.hpp"

namespace normex {

// The four tag sets of a theory, restricted to occurring literals.
struct Extension {
  std::set<Literal> plus_delta, minus_delta, plus_partial, minus_partial;

  friend bool operator==(const Extension&, const Extension&) = default;
};

// Forward chaining of strict rules: +Delta is the least set containing the
// facts and closed under strict rules; -Delta is its constructive dual.
std::pair<std::set<Literal>, std::set<Literal>> compute_definite(
    const DefeasibleTheory& t);

// Worklist fixpoint over rule applicability counters. A naive fixpoint that
// re-evaluates the proof conditions from scratch lives in the test suite as
// the independent oracle.
Extension compute_extension(const DefeasibleTheory& t);

struct DExtensionSet {
  std::set<Literal> literals;

  bool consistent() const {
    return normex::consistent(literals);
  }

  friend bool operator==(const DExtensionSet&, const DExtensionSet&) = default;
};

// E(D): phi for justified phi, ~phi for unjustified phi, over Lit(D).
// Justification is checked through +partial (Theorem 2).
DExtensionSet d_extension(const ArgumentationTheory& t);

// D-extension of a fact set L under a defeasible rule theory (R, >).
// Throws InvalidTheory when (L, R, >) fails argumentation-theory validation.
DExtensionSet d_extension(std::vector<Rule> rules,
                          std::vector<std::pair<std::string, std::string>> superiority,
                          const std::set<Literal>& L);

}  // namespace normex
