#ifndef BIHEYT_BIHEYTING_HPP
#define BIHEYT_BIHEYTING_HPP

#include <span>

#include "biheyt/presheaf.hpp"

namespace biheyt {

/// Operands of every binary operation must share one poset; otherwise
/// `PosetMismatch` is thrown.

bool leq(const ClopenSubobject& s, const ClopenSubobject& t);

ClopenSubobject top(const PosetPtr& poset);
ClopenSubobject bottom(const PosetPtr& poset);

/// Stagewise intersection; the empty family gives Σ.
ClopenSubobject meet(const PosetPtr& poset, std::span<const ClopenSubobject> family);
/// Stagewise union; the empty family gives 0.
ClopenSubobject join(const PosetPtr& poset, std::span<const ClopenSubobject> family);
ClopenSubobject meet(const ClopenSubobject& s, const ClopenSubobject& t);
ClopenSubobject join(const ClopenSubobject& s, const ClopenSubobject& t);

/// (S ⇒ T)_V: the points of Σ_V each of whose restrictions to V' ⊆ V lies
/// in T_{V'} whenever it lies in S_{V'}.
ClopenSubobject heyting_implies(const ClopenSubobject& s, const ClopenSubobject& t);

/// P_{(¬S)_V} = 1 − ⋁ of P_{S_{V'}} over the minimal contexts V' ⊆ V.
ClopenSubobject heyting_not(const ClopenSubobject& s);

/// P_{(¬¬S)_V} = ⋀ of P_{S_{V'}} over the minimal contexts V' ⊆ V.
ClopenSubobject double_heyting_not(const ClopenSubobject& s);

/// S ⇐ T, the least R with S ≤ T ∨ R. The component at V collects the
/// restrictions to V of S_W \ T_W over every W ⊇ V.
ClopenSubobject coheyting_subtract(const ClopenSubobject& s, const ClopenSubobject& t);

/// P_{(∼S)_V} = ⋁ over maximal Ṽ ⊇ V of δ_{Ṽ,V}(1 − P_{S_Ṽ}).
ClopenSubobject coheyting_not(const ClopenSubobject& s);

/// P_{(∼∼S)_V} = ⋁ over maximal Ṽ ⊇ V of δ_{Ṽ,V}(P_{S_Ṽ}).
ClopenSubobject double_coheyting_not(const ClopenSubobject& s);

bool is_heyting_regular(const ClopenSubobject& s);
bool is_coheyting_regular(const ClopenSubobject& s);

/// Every component is the restriction image of each larger component.
bool is_tight(const ClopenSubobject& s);

}  // namespace biheyt

#endif
