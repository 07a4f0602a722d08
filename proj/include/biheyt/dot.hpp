#ifndef BIHEYT_DOT_HPP
#define BIHEYT_DOT_HPP

#include <string>

#include "biheyt/presheaf.hpp"

namespace biheyt {

/// Hasse diagram of the context poset, smaller contexts at the bottom.
std::string contexts_dot(const ContextPoset& poset);

/// The same diagram with each node annotated by the subobject's projection
/// and atom subset at that context.
std::string subobject_dot(const ClopenSubobject& s);

}  // namespace biheyt

#endif
