#pragma once

#include <cstdint>

#include "normex/theory.hpp"

namespace normex {

// Layered random argumentation theories. Atoms are split into fact atoms,
// free atoms (antecedent-only, outside the fact set; these populate Lit(R))
// and conclusion atoms. Rules point from lower to higher atoms, every
// conclusion atom has at least one applicable rule, and every pair of rules
// with complementary conclusions is oriented by a random priority order, so
// the resulting superiority relation is a DAG and every atom is decided.
struct GenParams {
  int atoms = 6;
  int rules = 8;
  int fact_atoms = 2;
  int free_fact_atoms = 0;
  int max_body = 2;
  std::uint64_t seed = 0;
};

DefeasibleTheory generate_theory(const GenParams& params);

}  // namespace normex
