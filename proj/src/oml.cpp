#include "biheyt/oml.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace biheyt {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::OrthoNotInvolutive: return "OrthoNotInvolutive";
    case ErrorCode::NotAnOrthocomplement: return "NotAnOrthocomplement";
    case ErrorCode::OrthomodularityViolated: return "OrthomodularityViolated";
    case ErrorCode::UnboundedPair: return "UnboundedPair";
    case ErrorCode::DegenerateStructure: return "DegenerateStructure";
    case ErrorCode::InconsistentIdentification: return "InconsistentIdentification";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotASubobject: return "NotASubobject";
    case ErrorCode::PosetMismatch: return "PosetMismatch";
    case ErrorCode::NoLeastUpperWitness: return "NoLeastUpperWitness";
    case ErrorCode::UnknownContext: return "UnknownContext";
    case ErrorCode::SizeGuard: return "SizeGuard";
  }
  return "Unknown";
}

std::string_view kind_name(Kind kind) {
  return kind == Kind::lattice ? "lattice" : "pasted";
}

std::optional<ElementId> OrthoStructure::find(std::string_view label) const {
  // labels are sorted within each height, not globally
  for (ElementId e = 0; e < labels_.size(); ++e) {
    if (labels_[e] == label) return e;
  }
  return std::nullopt;
}

ElementId OrthoStructure::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorCode::UnknownElement, "unknown element '" + std::string(label) + "'");
}

std::optional<ElementId> OrthoStructure::meet(ElementId a, ElementId b) const {
  auto m = meet_[a * size() + b];
  if (m == kNone) return std::nullopt;
  return static_cast<ElementId>(m);
}

std::optional<ElementId> OrthoStructure::join(ElementId a, ElementId b) const {
  auto j = join_[a * size() + b];
  if (j == kNone) return std::nullopt;
  return static_cast<ElementId>(j);
}

std::optional<std::size_t> OrthoStructure::common_block(ElementId a, ElementId b) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].members.test(a) && blocks_[i].members.test(b)) return i;
  }
  return std::nullopt;
}

bool OrthoStructure::commutes(ElementId a, ElementId b) const {
  if (kind_ == Kind::pasted) return common_block(a, b).has_value();
  auto left = *meet(a, b);
  auto right = *meet(a, ortho(b));
  return *join(left, right) == a;
}

namespace {

std::string join_labels(const std::vector<std::string>& labels, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += sep;
    out += labels[i];
  }
  return out;
}

}  // namespace

namespace detail {

struct GivenBlock {
  std::vector<ElementId> atoms;
  std::vector<ElementId> element_of_mask;
};

struct Prepared {
  std::vector<std::string> labels;
  std::vector<ElementSet> up;
  std::vector<ElementId> ortho;
  bool from_pasting = false;
  std::vector<GivenBlock> given_blocks;
};

class StructureBuilder {
 public:
  static OrthoStructure finalize(Prepared p, const Limits& limits);

 private:
  static void close_order(std::vector<ElementSet>& up);
  static void canonicalize(Prepared& p, std::vector<unsigned>& heights);
  static void fill_bounds(OrthoStructure& s);
  static std::vector<Block> lattice_blocks(const OrthoStructure& s, const Limits& limits);
  static void verify_block(const OrthoStructure& s, const Block& b, ErrorCode code);
};

namespace {

std::string pair_text(const std::vector<std::string>& labels, std::size_t a, std::size_t b) {
  return "(" + labels[a] + ", " + labels[b] + ")";
}

// Height of every element: length of a longest chain from the bottom.
std::vector<unsigned> heights_of(const std::vector<ElementSet>& up) {
  const std::size_t n = up.size();
  std::vector<std::size_t> down_count(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = up[a].find_first(); b != ElementSet::npos; b = up[a].find_next(b)) ++down_count[b];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return down_count[x] < down_count[y]; });
  std::vector<unsigned> height(n, 0);
  for (auto a : order) {
    for (auto b = up[a].find_first(); b != ElementSet::npos; b = up[a].find_next(b)) {
      if (b != a) height[b] = std::max(height[b], height[a] + 1);
    }
  }
  return height;
}

// Bron-Kerbosch with pivoting; `adj` excludes self-loops.
void maximal_cliques(const std::vector<ElementSet>& adj, ElementSet r, ElementSet p, ElementSet x,
                     std::vector<ElementSet>& out) {
  if (p.none() && x.none()) {
    out.push_back(std::move(r));
    return;
  }
  ElementSet px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t best = 0;
  for (auto u = pivot; u != ElementSet::npos; u = px.find_next(u)) {
    auto c = (p & adj[u]).count();
    if (c >= best) {
      best = c;
      pivot = u;
    }
  }
  ElementSet candidates = p - adj[pivot];
  for (auto v = candidates.find_first(); v != ElementSet::npos; v = candidates.find_next(v)) {
    ElementSet r2 = r;
    r2.set(v);
    maximal_cliques(adj, std::move(r2), p & adj[v], x & adj[v], out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

void StructureBuilder::close_order(std::vector<ElementSet>& up) {
  const std::size_t n = up.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
}

void StructureBuilder::canonicalize(Prepared& p, std::vector<unsigned>& heights) {
  const std::size_t n = p.labels.size();
  auto old_heights = heights_of(p.up);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (old_heights[x] != old_heights[y]) return old_heights[x] < old_heights[y];
    return p.labels[x] < p.labels[y];
  });
  std::vector<ElementId> new_id(n);
  for (std::size_t i = 0; i < n; ++i) new_id[order[i]] = static_cast<ElementId>(i);

  Prepared q;
  q.from_pasting = p.from_pasting;
  q.labels.resize(n);
  q.up.assign(n, ElementSet(n));
  q.ortho.resize(n);
  heights.resize(n);
  for (std::size_t old = 0; old < n; ++old) {
    auto a = new_id[old];
    q.labels[a] = p.labels[old];
    q.ortho[a] = new_id[p.ortho[old]];
    heights[a] = old_heights[old];
    for (auto b = p.up[old].find_first(); b != ElementSet::npos; b = p.up[old].find_next(b)) {
      q.up[a].set(new_id[b]);
    }
  }
  for (auto& gb : p.given_blocks) {
    for (auto& e : gb.atoms) e = new_id[e];
    for (auto& e : gb.element_of_mask) e = new_id[e];
  }
  q.given_blocks = std::move(p.given_blocks);
  p = std::move(q);
}

void StructureBuilder::fill_bounds(OrthoStructure& s) {
  const std::size_t n = s.size();
  s.meet_.assign(n * n, OrthoStructure::kNone);
  s.join_.assign(n * n, OrthoStructure::kNone);
  auto best_of = [&](const ElementSet& set, bool highest) -> std::int32_t {
    std::size_t best = set.find_first();
    if (best == ElementSet::npos) return OrthoStructure::kNone;
    for (auto e = set.find_next(best); e != ElementSet::npos; e = set.find_next(e)) {
      if (highest ? s.height_[e] > s.height_[best] : s.height_[e] < s.height_[best]) best = e;
    }
    const auto& cone = highest ? s.down_[best] : s.up_[best];
    return cone == set ? static_cast<std::int32_t>(best) : OrthoStructure::kNone;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::int32_t m;
      std::int32_t j;
      if (s.up_[a].test(b)) {
        m = static_cast<std::int32_t>(a);
        j = static_cast<std::int32_t>(b);
      } else if (s.up_[b].test(a)) {
        m = static_cast<std::int32_t>(b);
        j = static_cast<std::int32_t>(a);
      } else {
        m = best_of(s.down_[a] & s.down_[b], true);
        j = best_of(s.up_[a] & s.up_[b], false);
      }
      s.meet_[a * n + b] = s.meet_[b * n + a] = m;
      s.join_[a * n + b] = s.join_[b * n + a] = j;
    }
  }
}

void StructureBuilder::verify_block(const OrthoStructure& s, const Block& b, ErrorCode code) {
  const auto size = b.element_of_mask.size();
  const AtomMask full = b.full_mask();
  std::set<ElementId> distinct(b.element_of_mask.begin(), b.element_of_mask.end());
  if (distinct.size() != size) {
    throw Error(code, "block " + b.id + " collapses distinct joins of its atoms");
  }
  for (AtomMask m1 = 0; m1 < size; ++m1) {
    auto e1 = b.element_of_mask[m1];
    if (s.ortho(e1) != b.element_of_mask[full & ~m1]) {
      throw Error(code, "block " + b.id + " is not closed under complement at " + s.label(e1));
    }
    for (AtomMask m2 = 0; m2 < size; ++m2) {
      bool subset = (m1 & ~m2) == 0;
      if (s.leq(e1, b.element_of_mask[m2]) != subset) {
        throw Error(code, "block " + b.id + " is not Boolean: order differs at " +
                              pair_text(s.labels_, e1, b.element_of_mask[m2]));
      }
    }
  }
}

std::vector<Block> StructureBuilder::lattice_blocks(const OrthoStructure& s, const Limits& limits) {
  const std::size_t n = s.size();
  std::vector<ElementSet> adj(n, ElementSet(n));
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (s.commutes(a, b)) {
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  }
  std::vector<ElementSet> cliques;
  ElementSet all(n);
  all.set();
  maximal_cliques(adj, ElementSet(n), all, ElementSet(n), cliques);

  std::vector<Block> out;
  for (auto& clique : cliques) {
    Block b;
    b.members = clique;
    for (auto e = clique.find_first(); e != ElementSet::npos; e = clique.find_next(e)) {
      if (e == s.bottom()) continue;
      bool minimal = true;
      for (auto f = clique.find_first(); f != ElementSet::npos; f = clique.find_next(f)) {
        if (f != e && f != s.bottom() && s.leq(f, e)) {
          minimal = false;
          break;
        }
      }
      if (minimal) b.atoms.push_back(static_cast<ElementId>(e));
    }
    std::sort(b.atoms.begin(), b.atoms.end(),
              [&](ElementId x, ElementId y) { return s.label(x) < s.label(y); });
    if (b.atoms.size() > limits.max_block_atoms) {
      throw Error(ErrorCode::SizeGuard, "block with " + std::to_string(b.atoms.size()) + " atoms");
    }
    b.element_of_mask.assign(std::size_t{1} << b.atoms.size(), s.bottom());
    for (AtomMask m = 1; m < b.element_of_mask.size(); ++m) {
      auto low = static_cast<unsigned>(__builtin_ctzll(m));
      b.element_of_mask[m] = *s.join(b.element_of_mask[m & (m - 1)], b.atoms[low]);
    }
    std::vector<std::string> atom_labels;
    for (auto a : b.atoms) atom_labels.push_back(s.label(a));
    b.id = join_labels(atom_labels, "|");
    for (auto e = clique.find_first(); e != ElementSet::npos; e = clique.find_next(e)) {
      b.elements.push_back(static_cast<ElementId>(e));
    }
    if (b.elements.size() != b.element_of_mask.size()) {
      throw Error(ErrorCode::OrthomodularityViolated,
                  "maximal compatible set " + b.id + " is not a Boolean subalgebra");
    }
    verify_block(s, b, ErrorCode::OrthomodularityViolated);
    out.push_back(std::move(b));
  }
  return out;
}

OrthoStructure StructureBuilder::finalize(Prepared p, const Limits& limits) {
  const std::size_t n = p.labels.size();
  if (n > limits.max_elements) {
    throw Error(ErrorCode::SizeGuard, "structure has " + std::to_string(n) + " elements (limit " +
                                          std::to_string(limits.max_elements) + ")");
  }
  if (n <= 2) {
    throw Error(ErrorCode::DegenerateStructure, "no element besides 0 and 1");
  }
  close_order(p.up);
  const auto order_error =
      p.from_pasting ? ErrorCode::InconsistentIdentification : ErrorCode::NotAPartialOrder;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (p.up[a].test(b) && p.up[b].test(a)) {
        throw Error(order_error, "antisymmetry fails for " + pair_text(p.labels, a, b));
      }
    }
  }

  std::vector<unsigned> heights;
  canonicalize(p, heights);

  OrthoStructure s;
  s.labels_ = std::move(p.labels);
  s.up_ = std::move(p.up);
  s.ortho_ = std::move(p.ortho);
  s.height_ = std::move(heights);
  s.down_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = s.up_[a].find_first(); b != ElementSet::npos; b = s.up_[a].find_next(b)) {
      s.down_[b].set(a);
    }
  }
  if (s.labels_.front() != "0" || s.labels_.back() != "1" || !s.up_[0].all() ||
      !s.down_[n - 1].all()) {
    throw Error(ErrorCode::NotAPartialOrder, "'0' and '1' must be the least and greatest elements");
  }

  for (ElementId a = 0; a < n; ++a) {
    if (s.ortho_[s.ortho_[a]] != a) {
      throw Error(ErrorCode::OrthoNotInvolutive, "ortho(ortho(" + s.labels_[a] + ")) = " +
                                                     s.labels_[s.ortho_[s.ortho_[a]]]);
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (auto b = s.up_[a].find_first(); b != ElementSet::npos; b = s.up_[a].find_next(b)) {
      if (!s.up_[s.ortho_[b]].test(s.ortho_[a])) {
        throw Error(ErrorCode::NotAnOrthocomplement,
                    "ortho does not reverse " + pair_text(s.labels_, a, b));
      }
    }
  }

  fill_bounds(s);

  for (ElementId a = 0; a < n; ++a) {
    auto m = s.meet(a, s.ortho_[a]);
    auto j = s.join(a, s.ortho_[a]);
    if ((m && *m != s.bottom()) || (j && *j != s.top())) {
      throw Error(ErrorCode::NotAnOrthocomplement,
                  s.labels_[a] + " and its orthocomplement are not complements");
    }
  }

  std::optional<std::pair<ElementId, ElementId>> unbounded;
  for (ElementId a = 0; a < n && !unbounded; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (!s.meet(a, b) || !s.join(a, b)) {
        unbounded = std::pair{a, b};
        break;
      }
    }
  }
  std::optional<std::pair<ElementId, ElementId>> oml_witness;
  if (!unbounded) {
    for (ElementId a = 0; a < n && !oml_witness; ++a) {
      for (auto b = s.up_[a].find_first(); b != ElementSet::npos; b = s.up_[a].find_next(b)) {
        auto bb = static_cast<ElementId>(b);
        if (*s.join(a, *s.meet(bb, s.ortho_[a])) != bb) {
          oml_witness = std::pair{a, bb};
          break;
        }
      }
    }
  }

  if (!p.from_pasting) {
    if (unbounded) {
      throw Error(ErrorCode::UnboundedPair,
                  "no meet or join for " + pair_text(s.labels_, unbounded->first, unbounded->second));
    }
    if (oml_witness) {
      throw Error(ErrorCode::OrthomodularityViolated,
                  "orthomodular law fails: x <= y but y != x v (y ^ x') for (x, y) = " +
                      pair_text(s.labels_, oml_witness->first, oml_witness->second));
    }
  }
  s.kind_ = (!unbounded && !oml_witness) ? Kind::lattice : Kind::pasted;

  if (s.kind_ == Kind::lattice) {
    s.blocks_ = lattice_blocks(s, limits);
  } else {
    std::map<std::string, Block> by_id;
    for (auto& gb : p.given_blocks) {
      Block b;
      b.atoms = gb.atoms;
      b.element_of_mask = gb.element_of_mask;
      std::vector<std::string> atom_labels;
      for (auto a : b.atoms) atom_labels.push_back(s.labels_[a]);
      b.id = join_labels(atom_labels, "|");
      b.members = ElementSet(n);
      for (auto e : b.element_of_mask) b.members.set(e);
      for (auto e = b.members.find_first(); e != ElementSet::npos; e = b.members.find_next(e)) {
        b.elements.push_back(static_cast<ElementId>(e));
      }
      verify_block(s, b, ErrorCode::InconsistentIdentification);
      by_id.emplace(b.id, std::move(b));
    }
    ElementSet covered(n);
    for (auto& [id, b] : by_id) {
      covered |= b.members;
      s.blocks_.push_back(std::move(b));
    }
    if (!covered.all()) {
      throw Error(ErrorCode::InconsistentIdentification, "some element lies in no block");
    }
  }
  std::sort(s.blocks_.begin(), s.blocks_.end(),
            [](const Block& x, const Block& y) { return x.id < y.id; });
  for (const auto& b : s.blocks_) {
    if (b.rank() > limits.max_block_atoms) {
      throw Error(ErrorCode::SizeGuard, "block " + b.id + " exceeds the atom limit");
    }
  }
  return s;
}

}  // namespace detail

namespace {

bool valid_atom_label(const std::string& label) {
  if (label.empty() || label == "0" || label == "1") return false;
  return label.find_first_of("|+() \t\r\n\"") == std::string::npos;
}

// Shortest readable name of the blockwise join of `chosen`, given the
// remaining atoms of that block. Ties are broken lexicographically.
std::string element_name(const std::vector<std::string>& chosen, const std::vector<std::string>& rest) {
  if (chosen.empty()) return "0";
  if (rest.empty()) return "1";
  std::string as_join = join_labels(chosen, "+");
  std::string as_complement =
      rest.size() == 1 ? rest.front() + "'" : "(" + join_labels(rest, "+") + ")'";
  if (as_complement.size() < as_join.size() ||
      (as_complement.size() == as_join.size() && as_complement < as_join)) {
    return as_complement;
  }
  return as_join;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

OrthoStructure validate(const RawStructure& raw, const Limits& limits) {
  detail::Prepared p;
  const std::size_t n = raw.elements.size();
  std::map<std::string, ElementId> index;
  for (const auto& label : raw.elements) {
    if (label.empty() || label.find('|') != std::string::npos) {
      throw Error(ErrorCode::ParseError, "invalid element label '" + label + "'");
    }
    if (!index.emplace(label, static_cast<ElementId>(index.size())).second) {
      throw Error(ErrorCode::ParseError, "duplicate element label '" + label + "'");
    }
  }
  if (!index.count("0") || !index.count("1")) {
    throw Error(ErrorCode::ParseError, "elements must include '0' and '1'");
  }
  if (n <= 2) throw Error(ErrorCode::DegenerateStructure, "no element besides 0 and 1");
  if (n > limits.max_elements) {
    throw Error(ErrorCode::SizeGuard, "structure has " + std::to_string(n) + " elements");
  }
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw Error(ErrorCode::UnknownElement, "unknown element '" + label + "'");
    }
    return it->second;
  };

  p.labels = raw.elements;
  p.up.assign(n, ElementSet(n));
  const auto zero = index.at("0");
  const auto one = index.at("1");
  for (std::size_t a = 0; a < n; ++a) {
    p.up[a].set(a);
    p.up[a].set(one);
    p.up[zero].set(a);
  }
  for (const auto& [a, b] : raw.leq) p.up[lookup(a)].set(lookup(b));

  constexpr auto unset = static_cast<ElementId>(-1);
  p.ortho.assign(n, unset);
  for (const auto& [a, b] : raw.ortho) {
    auto ia = lookup(a);
    auto ib = lookup(b);
    if (p.ortho[ia] != unset && p.ortho[ia] != ib) {
      throw Error(ErrorCode::OrthoNotInvolutive, "conflicting orthocomplements for '" + a + "'");
    }
    p.ortho[ia] = ib;
  }
  // a one-sided entry also determines the reverse direction
  for (std::size_t a = 0; a < n; ++a) {
    if (p.ortho[a] != unset && p.ortho[p.ortho[a]] == unset) p.ortho[p.ortho[a]] = static_cast<ElementId>(a);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (p.ortho[a] == unset) {
      throw Error(ErrorCode::OrthoNotInvolutive, "no orthocomplement for '" + p.labels[a] + "'");
    }
  }
  return detail::StructureBuilder::finalize(std::move(p), limits);
}

OrthoStructure from_greechie(const std::vector<std::vector<std::string>>& input, const Limits& limits) {
  if (input.empty()) throw Error(ErrorCode::DegenerateStructure, "no blocks");
  std::vector<std::vector<std::string>> blocks = input;
  std::set<std::string> atom_set;
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw Error(ErrorCode::ParseError, "block repeats an atom label");
    }
    if (block.size() < 2) throw Error(ErrorCode::ParseError, "block needs at least two atoms");
    if (block.size() > limits.max_block_atoms) {
      throw Error(ErrorCode::SizeGuard, "block with " + std::to_string(block.size()) + " atoms");
    }
    for (const auto& label : block) {
      if (!valid_atom_label(label)) {
        throw Error(ErrorCode::ParseError, "invalid atom label '" + label + "'");
      }
      atom_set.insert(label);
    }
  }
  std::map<std::string, int> atom_index;
  for (const auto& label : atom_set) atom_index.emplace(label, static_cast<int>(atom_index.size()));

  // node = (block, subset of block atoms)
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto& block : blocks) {
    offset.push_back(total);
    total += std::size_t{1} << block.size();
    if (total > limits.max_elements * std::size_t{64}) {
      throw Error(ErrorCode::SizeGuard, "pasting too large");
    }
  }
  auto atoms_of = [&](std::size_t b, AtomMask m) {
    std::vector<int> out;
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (m >> i & 1) out.push_back(atom_index.at(blocks[b][i]));
    }
    return out;
  };

  DisjointSets classes(total);
  std::map<std::vector<int>, std::size_t> by_set;
  std::map<std::vector<int>, std::size_t> by_complement;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const AtomMask full = (AtomMask{1} << blocks[b].size()) - 1;
    for (AtomMask m = 0; m <= full; ++m) {
      auto node = offset[b] + m;
      auto [it1, fresh1] = by_set.emplace(atoms_of(b, m), node);
      if (!fresh1) classes.unite(node, it1->second);
      auto [it2, fresh2] = by_complement.emplace(atoms_of(b, full & ~m), node);
      if (!fresh2) classes.unite(node, it2->second);
    }
  }

  std::map<std::size_t, ElementId> class_of_root;
  std::vector<ElementId> class_of(total);
  for (std::size_t node = 0; node < total; ++node) {
    auto root = classes.find(node);
    auto [it, fresh] = class_of_root.emplace(root, static_cast<ElementId>(class_of_root.size()));
    class_of[node] = it->second;
  }
  const std::size_t n = class_of_root.size();
  if (n > limits.max_elements) {
    throw Error(ErrorCode::SizeGuard, "pasting has " + std::to_string(n) + " elements");
  }

  detail::Prepared p;
  p.from_pasting = true;
  p.labels.assign(n, std::string{});
  p.up.assign(n, ElementSet(n));
  constexpr auto unset = static_cast<ElementId>(-1);
  p.ortho.assign(n, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    const AtomMask full = (AtomMask{1} << block.size()) - 1;
    std::set<ElementId> seen;
    detail::GivenBlock given;
    for (AtomMask m = 0; m <= full; ++m) {
      auto c = class_of[offset[b] + m];
      if (!seen.insert(c).second) {
        throw Error(ErrorCode::InconsistentIdentification,
                    "identification merges two elements of block " + join_labels(block, "|"));
      }
      given.element_of_mask.push_back(c);
      std::vector<std::string> chosen;
      std::vector<std::string> rest;
      for (std::size_t i = 0; i < block.size(); ++i) (m >> i & 1 ? chosen : rest).push_back(block[i]);
      auto name = element_name(chosen, rest);
      auto& current = p.labels[c];
      if (current != "0" && current != "1") {
        if (name == "0" || name == "1" || current.empty() || name.size() < current.size() ||
            (name.size() == current.size() && name < current)) {
          current = name;
        }
      }
      p.up[c].set(c);
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (!(m >> i & 1)) p.up[c].set(class_of[offset[b] + (m | AtomMask{1} << i)]);
      }
      auto complement = class_of[offset[b] + (full & ~m)];
      if (p.ortho[c] != unset && p.ortho[c] != complement) {
        throw Error(ErrorCode::InconsistentIdentification,
                    "identification gives an element two orthocomplements");
      }
      p.ortho[c] = complement;
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      given.atoms.push_back(class_of[offset[b] + (AtomMask{1} << i)]);
    }
    p.given_blocks.push_back(std::move(given));
  }
  if (class_of[0] == class_of[(std::size_t{1} << blocks[0].size()) - 1]) {
    throw Error(ErrorCode::InconsistentIdentification, "identification forces 0 = 1");
  }
  std::set<std::string> distinct(p.labels.begin(), p.labels.end());
  if (distinct.size() != n) {
    throw Error(ErrorCode::InconsistentIdentification,
                "atom labels collide with generated element names");
  }
  return detail::StructureBuilder::finalize(std::move(p), limits);
}

const std::vector<std::vector<std::string>>& cabello18_bases() {
  // vectors in R^4: v1=0001 v2=0010 v3=1100 v4=1-100 v5=0100 v6=1010 v7=10-10
  // v8=1-11-1 v9=1-1-11 v10=0011 v11=1111 v12=010-1 v13=1001 v14=100-1
  // v15=01-10 v16=11-11 v17=111-1 v18=-1111
  static const std::vector<std::vector<std::string>> bases = {
      {"v1", "v2", "v3", "v4"},    {"v1", "v5", "v6", "v7"},     {"v8", "v9", "v3", "v10"},
      {"v8", "v11", "v7", "v12"},  {"v2", "v5", "v13", "v14"},   {"v9", "v11", "v14", "v15"},
      {"v16", "v17", "v4", "v10"}, {"v16", "v18", "v6", "v12"},  {"v17", "v18", "v13", "v15"},
  };
  return bases;
}

OrthoStructure generate(std::string_view name, unsigned n, const Limits& limits) {
  if (name == "boolean") {
    if (n > limits.max_boolean_atoms) {
      throw Error(ErrorCode::SizeGuard, "boolean(" + std::to_string(n) + ") exceeds the atom limit " +
                                            std::to_string(limits.max_boolean_atoms));
    }
    if (n < 2) throw Error(ErrorCode::DegenerateStructure, "boolean(n) needs n >= 2");
    std::vector<std::string> atoms;
    for (unsigned i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('p' + i)));
    return from_greechie({atoms}, limits);
  }
  if (name == "mo") {
    if (n > limits.max_mo_pairs) {
      throw Error(ErrorCode::SizeGuard, "mo(" + std::to_string(n) + ") exceeds the pair limit");
    }
    if (n < 1) throw Error(ErrorCode::DegenerateStructure, "mo(n) needs n >= 1");
    std::vector<std::vector<std::string>> blocks;
    for (unsigned i = 0; i < n; ++i) {
      std::string a(1, static_cast<char>('a' + i));
      blocks.push_back({a, a + "'"});
    }
    return from_greechie(blocks, limits);
  }
  if (name == "cabello18") return from_greechie(cabello18_bases(), limits);
  throw Error(ErrorCode::ParseError, "unknown builtin '" + std::string(name) + "'");
}

}  // namespace biheyt
