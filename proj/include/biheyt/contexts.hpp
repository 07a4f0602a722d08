#ifndef BIHEYT_CONTEXTS_HPP
#define BIHEYT_CONTEXTS_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "biheyt/oml.hpp"

namespace biheyt {

using ContextIndex = std::uint32_t;

/// A nontrivial Boolean subalgebra, addressed by the `|`-joined labels of
/// its atoms. Element `element_of_mask[m]` is the join of the atoms in `m`.
struct Context {
  std::string id;
  std::vector<ElementId> atoms;
  std::vector<ElementId> element_of_mask;
  std::vector<ElementId> elements;
  ElementSet members;
  /// (element, mask) pairs sorted by element.
  std::vector<std::pair<ElementId, AtomMask>> mask_by_element;

  std::size_t rank() const { return atoms.size(); }
  AtomMask full_mask() const { return (AtomMask{1} << atoms.size()) - 1; }
  bool contains(ElementId e) const { return e < members.size() && members.test(e); }
  std::optional<AtomMask> mask_of(ElementId e) const;
  ElementId element(AtomMask m) const { return element_of_mask.at(m); }
};

/// All contexts of a structure ordered by inclusion.
///
/// Contexts are sorted by decreasing atom count and then by id, so every
/// proper superset of a context has a smaller index. For every inclusion
/// W ⊆ V the poset stores the restriction map sending each atom of V to the
/// unique atom of W above it.
class ContextPoset {
 public:
  const OrthoStructure& structure() const { return *structure_; }
  const std::shared_ptr<const OrthoStructure>& structure_ptr() const { return structure_; }

  std::size_t size() const { return contexts_.size(); }
  const Context& context(ContextIndex v) const { return contexts_.at(v); }
  const std::vector<Context>& contexts() const { return contexts_; }
  std::optional<ContextIndex> find(std::string_view id) const;
  /// Throws `UnknownContext`.
  ContextIndex at(std::string_view id) const;

  /// W ⊆ V.
  bool includes(ContextIndex v, ContextIndex w) const { return contexts_[w].members.is_subset_of(contexts_[v].members); }

  /// Contexts contained in V, V itself included, ascending.
  const std::vector<ContextIndex>& below(ContextIndex v) const { return below_[v]; }
  /// Contexts containing V, V itself included, ascending.
  const std::vector<ContextIndex>& above(ContextIndex v) const { return above_[v]; }
  const std::vector<ContextIndex>& minimal_below(ContextIndex v) const { return minimal_below_[v]; }
  const std::vector<ContextIndex>& maximal_above(ContextIndex v) const { return maximal_above_[v]; }
  const std::vector<ContextIndex>& minimal() const { return minimal_; }
  const std::vector<ContextIndex>& maximal() const { return maximal_; }

  /// Atom i of V maps to atom `restriction(v, w)[i]` of W. Requires W ⊆ V.
  std::span<const std::uint8_t> restriction(ContextIndex v, ContextIndex w) const;

  /// Image of an atom set of V under restriction to W.
  AtomMask push(ContextIndex v, ContextIndex w, AtomMask m) const;
  /// Atoms of V whose restriction to W lies in `m` (the element of W, read in V).
  AtomMask pull(ContextIndex v, ContextIndex w, AtomMask m) const;

 private:
  friend std::shared_ptr<const ContextPoset> enumerate_contexts(std::shared_ptr<const OrthoStructure>,
                                                                const Limits&);
  ContextPoset() = default;

  std::shared_ptr<const OrthoStructure> structure_;
  std::vector<Context> contexts_;
  std::map<std::string, ContextIndex, std::less<>> by_id_;
  std::vector<std::vector<ContextIndex>> below_;
  std::vector<std::vector<std::vector<std::uint8_t>>> restrictions_;
  std::vector<std::vector<ContextIndex>> above_;
  std::vector<std::vector<ContextIndex>> minimal_below_;
  std::vector<std::vector<ContextIndex>> maximal_above_;
  std::vector<ContextIndex> minimal_;
  std::vector<ContextIndex> maximal_;
};

/// Every nontrivial Boolean subalgebra, generated as the coarsenings of the
/// atom partition of each block and deduplicated by element set.
std::shared_ptr<const ContextPoset> enumerate_contexts(std::shared_ptr<const OrthoStructure> structure,
                                                       const Limits& limits = {});

/// Covering pairs (V, W): W ⊂ V with no context strictly between.
std::vector<std::pair<ContextIndex, ContextIndex>> hasse_edges(const ContextPoset& poset);

std::vector<ContextIndex> minimal_below(const ContextPoset& poset, ContextIndex v);
std::vector<ContextIndex> maximal_above(const ContextPoset& poset, ContextIndex v);

/// Least element of W above P, found by scanning W. With `V` given, P must lie
/// in V and W ⊆ V; the global variant accepts any element.
/// Throws `NoLeastUpperWitness` if the candidates have no least member.
ElementId delta(const ContextPoset& poset, ContextIndex v, ContextIndex w, ElementId p);
ElementId delta(const ContextPoset& poset, ElementId p, ContextIndex w);

}  // namespace biheyt

#endif
