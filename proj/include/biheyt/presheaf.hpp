#ifndef BIHEYT_PRESHEAF_HPP
#define BIHEYT_PRESHEAF_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "biheyt/contexts.hpp"

namespace biheyt {

// Spectra here are finite and discrete: every subset of Σ_V is clopen, so
// interiors and closures in the stagewise lattice operations are identities.

using PosetPtr = std::shared_ptr<const ContextPoset>;

/// A point of the spectrum Σ_V: an atom of V, read as the {0,1}-valued
/// homomorphism P ↦ [atom ≤ P].
struct SpectrumPoint {
  ContextIndex context;
  ElementId atom;

  friend bool operator==(const SpectrumPoint&, const SpectrumPoint&) = default;
};

std::vector<SpectrumPoint> spectrum(const ContextPoset& poset, ContextIndex v);

/// The unique atom of W ⊆ V lying above the point. Throws
/// std::invalid_argument if W is not contained in the point's context.
SpectrumPoint restrict(const ContextPoset& poset, const SpectrumPoint& point, ContextIndex w);

/// Atoms of V below P, as a mask over V's atom list.
AtomMask alpha(const ContextPoset& poset, ContextIndex v, ElementId p);
/// Join of the selected atoms.
ElementId alpha_inv(const ContextPoset& poset, ContextIndex v, AtomMask atoms);

namespace detail {
struct Unchecked {
  explicit Unchecked() = default;
};
}  // namespace detail

/// A clopen subobject of the spectral presheaf, stored as one atom mask per
/// context (the atoms below P_{S_V}).
class ClopenSubobject {
 public:
  /// No monotonicity check; library-internal results only.
  ClopenSubobject(PosetPtr poset, std::vector<AtomMask> components, detail::Unchecked)
    : poset_(std::move(poset)), components_(std::move(components)) {}

  const ContextPoset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }

  AtomMask component(ContextIndex v) const { return components_[v]; }
  std::span<const AtomMask> components() const { return components_; }
  /// P_{S_V}.
  ElementId projection(ContextIndex v) const;

  friend bool operator==(const ClopenSubobject&, const ClopenSubobject&) = default;

 private:
  PosetPtr poset_;
  std::vector<AtomMask> components_;
};

/// Compact text form "(V1:P1, V2:P2, ...)" in context order.
std::string describe(const ClopenSubobject& s);

/// Validates monotonicity; `NotASubobject` names a witnessing inclusion.
ClopenSubobject make_subobject(PosetPtr poset, std::span<const ElementId> projections);
ClopenSubobject make_subobject(PosetPtr poset, std::vector<AtomMask> components);

/// Missing contexts are an error; so are elements outside their context.
ClopenSubobject make_subobject(PosetPtr poset, const std::map<std::string, ElementId>& by_context);

/// All clopen subobjects, largest context first, components ascending.
/// Throws `SizeGuard` once more than `max_count` would be produced.
std::vector<ClopenSubobject> enumerate_subobjects(const PosetPtr& poset, std::size_t max_count);

struct RestrictionImage {
  ElementId image;           ///< projection of the pointwise restriction of S_V
  ElementId coarse_grained;  ///< δ_{V,W}(P_{S_V}) by scanning W
};

/// Both routes to the restricted component. Throws std::logic_error when
/// they disagree.
RestrictionImage restriction_image_projection(const ClopenSubobject& s, ContextIndex v, ContextIndex w);

/// One atom per context, compatible with every restriction map.
struct GlobalSection {
  std::vector<ElementId> atoms;

  friend bool operator==(const GlobalSection&, const GlobalSection&) = default;
};

struct SectionSearch {
  std::vector<GlobalSection> sections;
  std::uint64_t nodes = 0;
};

/// Backtracking over maximal contexts. An empty result certifies a
/// Kochen-Specker configuration. Throws `SizeGuard` past `node_budget`.
SectionSearch global_sections(const ContextPoset& poset, std::uint64_t node_budget);

}  // namespace biheyt

#endif
