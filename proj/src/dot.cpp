#include "normex/dot.hpp"

#include <sstream>

namespace normex {

std::string export_dot(const Framework& fw) {
  std::ostringstream out;
  out << "digraph framework {\n";
  for (int i = 0; i < static_cast<int>(fw.arguments().size()); ++i) {
    out << "  " << fw.display_name(i) << " [label=\"" << fw.display_name(i) << ": "
        << to_string(fw.arguments()[i].conclusion) << "\"];\n";
  }
  for (const auto& [a, b] : fw.attacks())
    out << "  " << fw.display_name(a) << " -> " << fw.display_name(b) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const DependencyGraph& g) {
  std::ostringstream out;
  out << "digraph dependencies {\n";
  for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
  for (const auto& [a, b] : g.edges)
    out << "  \"" << a << "\" -> \"" << b << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace normex
