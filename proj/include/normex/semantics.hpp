#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "normex/argumentation.hpp"
#include "normex/explanation.hpp"

namespace normex {

// p ::= l | not p | OBL l | PERM l  (modal operators over literals only)
struct Formula {
  enum class Kind { literal, negation, obligation, permission };
  Kind kind = Kind::literal;
  Literal lit;
  std::shared_ptr<Formula> inner;  // negation only

  static Formula make_literal(Literal l);
  static Formula make_negation(Formula f);
  static Formula make_obligation(Literal l);
  static Formula make_permission(Literal l);
};

// Accepts "OBL lit", "PERM lit", "-lit", "lit".
std::optional<Formula> parse_formula(const std::string& text);
std::string to_string(const Formula& f);

// Worlds are nonempty subsets of E(D), encoded as bitmasks over the sorted
// extension literals.
using WorldMask = std::uint32_t;

class DeonticModel {
 public:
  static constexpr int kDefaultWorldCap = 20;

  // Throws CyclicSetup, WorldCapExceeded, InconsistentExtension.
  static DeonticModel build(const ArgumentationTheory& t,
                            int world_cap = kDefaultWorldCap);

  const ArgumentationTheory& source() const { return source_; }
  const std::vector<Literal>& extension() const { return ext_; }
  int bits() const { return static_cast<int>(ext_.size()); }
  std::uint64_t world_count() const { return (1ull << bits()) - 1; }
  WorldMask full_world() const { return static_cast<WorldMask>(world_count()); }
  bool valid_world(WorldMask w) const { return w != 0 && w <= full_world(); }
  std::vector<Literal> world_literals(WorldMask w) const;
  std::optional<int> literal_bit(const Literal& l) const;

  // Conclusion classes: one neighborhood entry per distinct rule conclusion.
  const std::vector<Literal>& classes() const { return classes_; }
  bool class_fired(WorldMask w, int class_idx) const;
  // True iff N(w) contains the empty set (some class collapses at w).
  bool neighborhood_has_empty(WorldMask w) const;

  // OBL: ||l|| in N(w) with the nonempty guard; PERM: W - ||l|| not in N(w).
  bool obl_holds(WorldMask w, const Literal& l) const;
  bool perm_holds(WorldMask w, const Literal& l) const;
  bool holds(WorldMask w, const Formula& f) const;  // throws UnknownWorld
  std::vector<WorldMask> truth_set(const Formula& f) const;

 private:
  ArgumentationTheory source_;
  std::vector<Literal> ext_;      // E(D), sorted
  std::vector<Literal> classes_;  // distinct rule conclusions, sorted
  std::vector<std::uint64_t> fired_;  // per world-1: class bitmask

  explicit DeonticModel(ArgumentationTheory t) : source_(std::move(t)) {}
};

// Explicit neighborhood model over literal-labelled worlds; the portable
// representation used for submodels and structural comparison.
struct SubModel {
  std::vector<std::set<Literal>> worlds;  // sorted
  // per world: the neighborhood family; each member is a sorted list of
  // world indices; families sorted and deduplicated
  std::vector<std::vector<std::vector<int>>> neighborhoods;

  friend bool operator==(const SubModel&, const SubModel&) = default;

  std::optional<int> world_index(const std::set<Literal>& w) const;
  std::vector<int> literal_truth_set(const Literal& l) const;
  bool obl_holds(int world_idx, const Literal& l) const;
  bool perm_holds(int world_idx, const Literal& l) const;
  bool holds(int world_idx, const Formula& f) const;
};

// Full model in explicit form (guarded by size).
SubModel materialize(const DeonticModel& m);

// Generated submodel: worlds restricted to X, neighborhoods intersected.
SubModel generated_submodel(const DeonticModel& m, const std::vector<WorldMask>& X);
SubModel generated_submodel(const SubModel& m, const std::set<std::set<Literal>>& X);

// Certifies the denotable part of the generated-submodel biconditional:
// for every literal, ||l|| in N(w) iff ||l|| ∩ X in N_X(w), at every kept world.
bool certify_generated(const DeonticModel& m, const SubModel& sub);

// Drops every world containing a fact whose factual argument is outside the
// explanation; returns the generated submodel on the rest.
SubModel explanation_submodel(const DeonticModel& m, const Explanation& e);

// Prop. 4: a witness world per depth stratum satisfying the stratum's
// premises with the stratum conclusions' truth sets in its neighborhood.
// Factual arguments hold vacuously.
bool verify_argument_condition(const DeonticModel& m, const Framework& fw, int arg);

bool verify_explanation_condition(const DeonticModel& m, const Framework& fw,
                                  const Explanation& e);

struct SemanticStabilityResult {
  bool holds = false;
  bool explanation_in_d_plus = false;
  bool submodels_equal = false;
  std::set<Literal> f_plus;
};

// Corollary 2: D+ = (F ∪ F+, R, >) with F+ the antecedent-only unconcluded
// literals; checks the explanation survives in AF(D+) and that the D- and
// D+-explanation submodels agree on their common world core.
// Throws InconsistentFPlus when F+ (or F ∪ F+) is inconsistent.
SemanticStabilityResult semantic_stability_check(const ArgumentationTheory& t,
                                                 const Explanation& e,
                                                 int world_cap = DeonticModel::kDefaultWorldCap);

}  // namespace normex
