#ifndef BIHEYT_DASEINISATION_HPP
#define BIHEYT_DASEINISATION_HPP

#include "biheyt/presheaf.hpp"

namespace biheyt {

/// Outer daseinisation: V ↦ least element of V above P, for every context.
/// Throws `NoLeastUpperWitness` for pastings where some context has no
/// least dominating element.
ClopenSubobject daseinise(const PosetPtr& poset, ElementId p);

struct MeetDefect {
  ClopenSubobject of_meet;   ///< daseinise(P ∧ Q)
  ClopenSubobject meet_of;   ///< daseinise(P) ∧ daseinise(Q)
  bool strict;
};

/// Throws `UnboundedPair` if P ∧ Q does not exist, and std::logic_error if
/// the first component fails to lie below the second.
MeetDefect daseinise_meet_defect(const PosetPtr& poset, ElementId p, ElementId q);

}  // namespace biheyt

#endif
