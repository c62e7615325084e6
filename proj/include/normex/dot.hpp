#pragma once

#include <string>

#include "normex/argumentation.hpp"
#include "normex/graph.hpp"

namespace normex {

// Framework: nodes labeled "id: conclusion", directed attack edges.
std::string export_dot(const Framework& fw);

// Dependency graph: atoms as nodes, dependency edges.
std::string export_dot(const DependencyGraph& g);

}  // namespace normex
