#pragma once

#include <set>
#include <string>
#include <utility>

#include "normex/theory.hpp"

namespace normex {

// Atom-level dependency graph: (n, m) is an edge iff some rule concludes
// n or ~n and some rule for m or ~m mentions n or ~n in its antecedent.
struct DependencyGraph {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;

  bool is_acyclic() const;

  friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;
};

DependencyGraph dependency_graph(const DefeasibleTheory& t);

// Transitive closure of the superiority relation, as label pairs.
std::set<std::pair<std::string, std::string>> superiority_closure(const DefeasibleTheory& t);

bool superiority_acyclic(const DefeasibleTheory& t);

// Both acyclicity preconditions at once: irreflexive superiority closure
// and acyclic dependency graph.
bool is_acyclic_setup(const DefeasibleTheory& t);

}  // namespace normex
