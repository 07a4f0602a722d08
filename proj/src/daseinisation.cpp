#include "biheyt/daseinisation.hpp"

#include <stdexcept>

#include "biheyt/biheyting.hpp"

namespace biheyt {

ClopenSubobject daseinise(const PosetPtr& poset, ElementId p) {
  std::vector<AtomMask> components;
  components.reserve(poset->size());
  for (ContextIndex v = 0; v < poset->size(); ++v) {
    components.push_back(*poset->context(v).mask_of(delta(*poset, p, v)));
  }
  return ClopenSubobject(poset, std::move(components), detail::Unchecked{});
}

MeetDefect daseinise_meet_defect(const PosetPtr& poset, ElementId p, ElementId q) {
  const auto& s = poset->structure();
  auto pq = s.meet(p, q);
  if (!pq) {
    throw Error(ErrorCode::UnboundedPair, "no meet of " + s.label(p) + " and " + s.label(q));
  }
  auto of_meet = daseinise(poset, *pq);
  auto meet_of = meet(daseinise(poset, p), daseinise(poset, q));
  if (!leq(of_meet, meet_of)) {
    throw std::logic_error("daseinisation of a meet exceeds the meet of daseinisations");
  }
  bool strict = of_meet != meet_of;
  return {std::move(of_meet), std::move(meet_of), strict};
}

}  // namespace biheyt
