#include "biheyt/dot.hpp"

#include <sstream>

namespace biheyt {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class Label>
std::string hasse(const ContextPoset& poset, const char* name, Label&& label) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (ContextIndex v = 0; v < poset.size(); ++v) {
    out << "  c" << v << " [label=" << quoted(label(v)) << "];\n";
  }
  for (const auto& [v, w] : hasse_edges(poset)) out << "  c" << w << " -> c" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string contexts_dot(const ContextPoset& poset) {
  return hasse(poset, "contexts", [&](ContextIndex v) { return poset.context(v).id; });
}

std::string subobject_dot(const ClopenSubobject& s) {
  const auto& poset = s.poset();
  const auto& structure = poset.structure();
  return hasse(poset, "subobject", [&](ContextIndex v) {
    const auto& c = poset.context(v);
    std::string atoms;
    for (std::size_t i = 0; i < c.atoms.size(); ++i) {
      if (s.component(v) >> i & 1) {
        if (!atoms.empty()) atoms += ",";
        atoms += structure.label(c.atoms[i]);
      }
    }
    return c.id + "\\nP = " + structure.label(s.projection(v)) + "\\n{" + atoms + "}";
  });
}

}  // namespace biheyt
