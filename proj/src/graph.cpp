#include "normex/graph.hpp"

#include <map>
#include <vector>

namespace normex {

namespace {

// Kahn's algorithm over an adjacency set.
template <typename Node>
bool acyclic(const std::set<Node>& nodes,
             const std::set<std::pair<Node, Node>>& edges) {
  std::map<Node, int> indegree;
  std::map<Node, std::vector<Node>> adj;
  for (const auto& n : nodes) indegree[n] = 0;
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    ++indegree[b];
  }
  std::vector<Node> queue;
  for (const auto& [n, d] : indegree)
    if (d == 0) queue.push_back(n);
  std::size_t seen = 0;
  while (!queue.empty()) {
    Node n = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& m : adj[n])
      if (--indegree[m] == 0) queue.push_back(m);
  }
  return seen == nodes.size();
}

}  // namespace

bool DependencyGraph::is_acyclic() const { return acyclic(vertices, edges); }

DependencyGraph dependency_graph(const DefeasibleTheory& t) {
  DependencyGraph g;
  g.vertices = t.occurring_atoms();

  auto concluded = [&](const std::string& atom) {
    return !t.rules_for(pos(atom)).empty() || !t.rules_for(neg(atom)).empty();
  };
  for (const auto& n : g.vertices) {
    if (!concluded(n)) continue;
    for (const auto& m : g.vertices) {
      if (!concluded(m)) continue;
      bool mentioned = false;
      for (int ri : t.rules_for(pos(m))) {
        const auto& ants = t.rules[ri].antecedents;
        for (const auto& a : ants)
          if (a.atom == n) { mentioned = true; break; }
        if (mentioned) break;
      }
      if (!mentioned) {
        for (int ri : t.rules_for(neg(m))) {
          const auto& ants = t.rules[ri].antecedents;
          for (const auto& a : ants)
            if (a.atom == n) { mentioned = true; break; }
          if (mentioned) break;
        }
      }
      if (mentioned) g.edges.insert({n, m});
    }
  }
  return g;
}

std::set<std::pair<std::string, std::string>> superiority_closure(
    const DefeasibleTheory& t) {
  std::set<std::pair<std::string, std::string>> closure(t.superiority.begin(),
                                                        t.superiority.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::pair<std::string, std::string>> add;
    for (const auto& [a, b] : closure)
      for (const auto& [c, d] : closure)
        if (b == c && !closure.count({a, d})) add.insert({a, d});
    if (!add.empty()) {
      closure.insert(add.begin(), add.end());
      changed = true;
    }
  }
  return closure;
}

bool superiority_acyclic(const DefeasibleTheory& t) {
  for (const auto& [a, b] : superiority_closure(t))
    if (a == b) return false;
  return true;
}

bool is_acyclic_setup(const DefeasibleTheory& t) {
  return superiority_acyclic(t) && dependency_graph(t).is_acyclic();
}

}  // namespace normex
