#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "normex/extension.hpp"
#include "normex/theory.hpp"

namespace normex {

// How the superiority relation enters the attack relation. `defeat` is the
// default: A attacks B iff the conclusions conflict and TopRule(B) is not
// strictly superior to TopRule(A). The alternatives exist for comparison.
enum class AttackMode { defeat, superior_only, ignore_superiority };

std::string to_string(AttackMode m);
std::optional<AttackMode> attack_mode_from_string(const std::string& s);

struct Argument {
  std::optional<int> rule;    // index into theory rules; nullopt for factual
  std::vector<int> children;  // direct subarguments, ordered by concluded literal
  Literal conclusion;
  std::string canonical;      // structural id, stable across frameworks
  int height = 1;             // factual arguments have height 1
  std::vector<int> leaves;    // fact indices of the factual leaves, sorted
};

class Framework {
 public:
  // Builds every constructible argument and the attack relation.
  // Throws CyclicDependencies when the dependency graph is cyclic.
  static Framework build(const ArgumentationTheory& t,
                         AttackMode mode = AttackMode::defeat);

  // Same construction without argumentation-theory validation. The fact list
  // may carry both polarities of an atom; used to build the shared argument
  // universe that the stability check filters per fact superset.
  static Framework build_raw(DefeasibleTheory t,
                             AttackMode mode = AttackMode::defeat);

  const std::vector<Argument>& arguments() const { return args_; }
  const std::set<std::pair<int, int>>& attacks() const { return attacks_; }
  bool attacks_pair(int a, int b) const { return attacks_.count({a, b}) != 0; }
  std::vector<int> attackers_of(int a) const;

  std::string display_name(int a) const { return "A" + std::to_string(a + 1); }
  std::optional<int> by_canonical(const std::string& id) const;
  std::optional<int> by_display_name(const std::string& name) const;

  // Transitive subarguments, excluding the argument itself.
  const std::vector<int>& proper_subarguments(int a) const;

  const DefeasibleTheory& theory() const { return theory_; }
  AttackMode mode() const { return mode_; }

 private:
  Framework() = default;
  DefeasibleTheory theory_;
  AttackMode mode_ = AttackMode::defeat;
  std::vector<Argument> args_;
  std::set<std::pair<int, int>> attacks_;
  std::map<std::string, int> canon_;
  std::vector<std::vector<int>> proper_subs_;
};

struct JustificationResult {
  std::set<int> justified;
  std::set<int> rejected;
  std::set<Literal> justified_conclusions;
};

// A framework restricted to the arguments whose factual leaves survive a
// fact-set filter. Presence is closed under subarguments by construction.
struct FrameworkView {
  const Framework* fw = nullptr;
  std::vector<char> present;

  bool has(int a) const { return present[a]; }
};

FrameworkView full_view(const Framework& fw);
FrameworkView view_with_facts(const Framework& fw, const std::set<Literal>& facts);

bool supports(const FrameworkView& v, const std::set<int>& args, int a);
bool undercut(const FrameworkView& v, const std::set<int>& args, int a);
bool acceptable(const FrameworkView& v, int a, const std::set<int>& args);
JustificationResult compute_justification(const FrameworkView& v);

// Def. 5 attack between two concrete arguments under a superiority relation.
bool attack_holds(const Argument& a, const Argument& b, const DefeasibleTheory& t,
                  AttackMode mode = AttackMode::defeat);

// Every proper subargument of `a` belongs to `args`.
bool supports(const Framework& fw, const std::set<int>& args, int a);

// `args` supports some argument attacking a proper subargument of `a`.
bool undercut(const Framework& fw, const std::set<int>& args, int a);

// Every attacker of `a` is undercut by `args`.
bool acceptable(const Framework& fw, int a, const std::set<int>& args);

// Grounded-style fixpoints. The justification rounds close over proper
// subarguments (an argument enters only once its subarguments are in);
// rejection requires a justified attacker or a rejected proper subargument.
JustificationResult compute_justification(const Framework& fw);

// Theorem 2 bridge: justified conclusions equal +partial and fully rejected
// conclusions equal -partial, both restricted to constructible conclusions.
bool theorem2_check(const ArgumentationTheory& t);

}  // namespace normex
