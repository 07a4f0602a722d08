#ifndef BIHEYT_TESTS_SUPPORT_HPP
#define BIHEYT_TESTS_SUPPORT_HPP

#include <memory>
#include <string>
#include <vector>

#include "biheyt/biheyting.hpp"
#include "biheyt/contexts.hpp"
#include "biheyt/daseinisation.hpp"
#include "biheyt/io.hpp"
#include "biheyt/presheaf.hpp"

namespace testing {

using namespace biheyt;

inline PosetPtr poset_of(const OrthoStructure& s) {
  return enumerate_contexts(std::make_shared<const OrthoStructure>(s));
}

inline PosetPtr poset_of(std::string_view builtin) { return poset_of(builtin_structure(builtin)); }

/// Projection labels in context order.
inline std::vector<std::string> labels(const ClopenSubobject& s) {
  std::vector<std::string> out;
  for (ContextIndex v = 0; v < s.poset().size(); ++v) out.push_back(s.poset().structure().label(s.projection(v)));
  return out;
}

/// Subobject from projection labels in context order.
inline ClopenSubobject subobject(const PosetPtr& poset, const std::vector<std::string>& projections) {
  std::vector<ElementId> ids;
  for (const auto& l : projections) ids.push_back(poset->structure().at(l));
  return make_subobject(poset, ids);
}

inline ClopenSubobject das(const PosetPtr& poset, std::string_view label) {
  return daseinise(poset, poset->structure().at(label));
}

/// Least element of context w above p, by a direct scan of the order.
inline ElementId least_above(const ContextPoset& poset, ContextIndex w, ElementId p) {
  const auto& s = poset.structure();
  const auto& elements = poset.context(w).elements;
  for (auto q : elements) {
    if (!s.leq(p, q)) continue;
    bool least = true;
    for (auto r : elements) {
      if (s.leq(p, r) && !s.leq(q, r)) least = false;
    }
    if (least) return q;
  }
  throw std::logic_error("no least upper element");
}

}  // namespace testing

#endif
