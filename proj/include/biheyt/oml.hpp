#ifndef BIHEYT_OML_HPP
#define BIHEYT_OML_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "biheyt/error.hpp"

namespace biheyt {

using ElementId = std::uint32_t;
using ElementSet = boost::dynamic_bitset<>;

/// Subset of a Boolean algebra's atoms, bit i standing for atom i.
using AtomMask = std::uint64_t;

enum class Kind { lattice, pasted };

std::string_view kind_name(Kind kind);

/// Size guards shared by every stage of the pipeline.
struct Limits {
  std::size_t max_elements = 1024;
  unsigned max_boolean_atoms = 10;
  unsigned max_mo_pairs = 26;
  unsigned max_block_atoms = 16;
  std::size_t max_contexts = 50000;
  std::size_t max_subobjects = 1000000;
  std::uint64_t search_budget = 10000000;
};

/// A maximal Boolean subalgebra of the structure.
///
/// `element_of_mask[m]` is the join of the atoms selected by `m`, so the
/// block is exactly the image of `element_of_mask`.
struct Block {
  std::string id;
  std::vector<ElementId> atoms;
  std::vector<ElementId> element_of_mask;
  std::vector<ElementId> elements;
  ElementSet members;

  std::size_t rank() const { return atoms.size(); }
  AtomMask full_mask() const { return (AtomMask{1} << atoms.size()) - 1; }
};

/// Unvalidated explicit description: element labels, order generators and
/// the orthocomplement as label pairs. Labels "0" and "1" are mandatory.
struct RawStructure {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  std::vector<std::pair<std::string, std::string>> ortho;
};

namespace detail {
class StructureBuilder;
}

/// A validated finite orthomodular lattice, or a Greechie pasting of Boolean
/// blocks where only blockwise operations are guaranteed.
///
/// Elements are numbered canonically by (height, label); 0 is always the
/// first id and 1 the last. Instances are immutable.
class OrthoStructure {
 public:
  std::size_t size() const { return labels_.size(); }
  Kind kind() const { return kind_; }

  ElementId bottom() const { return 0; }
  ElementId top() const { return static_cast<ElementId>(labels_.size() - 1); }

  const std::string& label(ElementId e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> find(std::string_view label) const;
  /// Throws `UnknownElement` when the label is absent.
  ElementId at(std::string_view label) const;

  bool leq(ElementId a, ElementId b) const { return up_[a].test(b); }
  ElementId ortho(ElementId a) const { return ortho_[a]; }
  unsigned height(ElementId a) const { return height_[a]; }

  /// Global meet/join; empty for `pasted` structures lacking the bound.
  std::optional<ElementId> meet(ElementId a, ElementId b) const;
  std::optional<ElementId> join(ElementId a, ElementId b) const;

  const ElementSet& down_set(ElementId a) const { return down_[a]; }
  const ElementSet& up_set(ElementId a) const { return up_[a]; }

  const std::vector<Block>& blocks() const { return blocks_; }

  /// Compatibility: a = (a ∧ b) ∨ (a ∧ b') for lattices, common block
  /// membership for pastings.
  bool commutes(ElementId a, ElementId b) const;

  /// Index of the first block containing both, if any.
  std::optional<std::size_t> common_block(ElementId a, ElementId b) const;

 private:
  friend class detail::StructureBuilder;
  OrthoStructure() = default;

  static constexpr std::int32_t kNone = -1;

  Kind kind_ = Kind::lattice;
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementId> ortho_;
  std::vector<unsigned> height_;
  std::vector<std::int32_t> meet_;
  std::vector<std::int32_t> join_;
  std::vector<Block> blocks_;
};

/// Closes the order reflexively and transitively (0 and 1 are implied bounds),
/// checks the ortholattice axioms and orthomodularity. The result is always
/// of kind `lattice`.
OrthoStructure validate(const RawStructure& raw, const Limits& limits = {});

/// Pastes Boolean blocks given by atom labels. Two blockwise joins are the
/// same element when their atom label sets, or their complementary label
/// sets, coincide (transitively). The result is promoted to `lattice` when all
/// global bounds exist and orthomodularity holds.
OrthoStructure from_greechie(const std::vector<std::vector<std::string>>& blocks,
                             const Limits& limits = {});

/// Builtins: "boolean" (n atoms p, q, r, ...), "mo" (n two-atom blocks
/// {a, a'}, {b, b'}, ...) and "cabello18" (n ignored).
OrthoStructure generate(std::string_view name, unsigned n = 0, const Limits& limits = {});

/// The nine orthogonal bases of the 18-vector Kochen-Specker configuration,
/// by vector label.
const std::vector<std::vector<std::string>>& cabello18_bases();

inline const std::vector<Block>& blocks(const OrthoStructure& s) { return s.blocks(); }
inline bool commutes(const OrthoStructure& s, ElementId a, ElementId b) { return s.commutes(a, b); }

}  // namespace biheyt

#endif
