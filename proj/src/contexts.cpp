#include "biheyt/contexts.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace biheyt {

std::optional<AtomMask> Context::mask_of(ElementId e) const {
  auto it = std::lower_bound(mask_by_element.begin(), mask_by_element.end(), e,
                             [](const auto& entry, ElementId key) { return entry.first < key; });
  if (it == mask_by_element.end() || it->first != e) return std::nullopt;
  return it->second;
}

std::optional<ContextIndex> ContextPoset::find(std::string_view id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

ContextIndex ContextPoset::at(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error(ErrorCode::UnknownContext, "unknown context '" + std::string(id) + "'");
}

std::span<const std::uint8_t> ContextPoset::restriction(ContextIndex v, ContextIndex w) const {
  const auto& list = below_[v];
  auto it = std::lower_bound(list.begin(), list.end(), w);
  if (it == list.end() || *it != w) {
    throw std::invalid_argument("context " + contexts_[w].id + " is not contained in " + contexts_[v].id);
  }
  return restrictions_[v][static_cast<std::size_t>(it - list.begin())];
}

AtomMask ContextPoset::push(ContextIndex v, ContextIndex w, AtomMask m) const {
  auto r = restriction(v, w);
  AtomMask out = 0;
  for (; m; m &= m - 1) out |= AtomMask{1} << r[static_cast<std::size_t>(__builtin_ctzll(m))];
  return out;
}

AtomMask ContextPoset::pull(ContextIndex v, ContextIndex w, AtomMask m) const {
  auto r = restriction(v, w);
  AtomMask out = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (m >> r[i] & 1) out |= AtomMask{1} << i;
  }
  return out;
}

namespace {

// Calls `emit` with the cell masks of every partition of `k` atoms into at
// least two cells (restricted growth strings).
void for_each_coarsening(unsigned k, const std::function<void(const std::vector<AtomMask>&)>& emit) {
  std::vector<AtomMask> cells;
  std::function<void(unsigned)> place = [&](unsigned atom) {
    if (atom == k) {
      if (cells.size() >= 2) emit(cells);
      return;
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      cells[c] |= AtomMask{1} << atom;
      place(atom + 1);
      cells[c] &= ~(AtomMask{1} << atom);
    }
    cells.push_back(AtomMask{1} << atom);
    place(atom + 1);
    cells.pop_back();
  };
  place(0);
}

}  // namespace

std::shared_ptr<const ContextPoset> enumerate_contexts(std::shared_ptr<const OrthoStructure> structure,
                                                       const Limits& limits) {
  const auto& s = *structure;
  std::map<std::vector<ElementId>, Context> unique;

  for (const auto& block : s.blocks()) {
    for_each_coarsening(static_cast<unsigned>(block.rank()), [&](const std::vector<AtomMask>& raw_cells) {
      std::vector<AtomMask> cells = raw_cells;
      std::sort(cells.begin(), cells.end(), [&](AtomMask x, AtomMask y) {
        return s.label(block.element_of_mask[x]) < s.label(block.element_of_mask[y]);
      });
      Context c;
      const std::size_t size = std::size_t{1} << cells.size();
      c.element_of_mask.resize(size);
      for (AtomMask m = 0; m < size; ++m) {
        AtomMask in_block = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (m >> i & 1) in_block |= cells[i];
        }
        c.element_of_mask[m] = block.element_of_mask[in_block];
      }
      c.elements = c.element_of_mask;
      std::sort(c.elements.begin(), c.elements.end());
      if (unique.count(c.elements)) return;
      if (unique.size() >= limits.max_contexts) {
        throw Error(ErrorCode::SizeGuard,
                    "more than " + std::to_string(limits.max_contexts) + " contexts");
      }
      for (auto cell : cells) c.atoms.push_back(block.element_of_mask[cell]);
      for (std::size_t i = 0; i < c.atoms.size(); ++i) {
        if (i) c.id += '|';
        c.id += s.label(c.atoms[i]);
      }
      c.members = ElementSet(s.size());
      for (AtomMask m = 0; m < size; ++m) {
        c.members.set(c.element_of_mask[m]);
        c.mask_by_element.emplace_back(c.element_of_mask[m], m);
      }
      std::sort(c.mask_by_element.begin(), c.mask_by_element.end());
      auto key = c.elements;
      unique.emplace(std::move(key), std::move(c));
    });
  }

  auto poset = std::shared_ptr<ContextPoset>(new ContextPoset());
  poset->structure_ = std::move(structure);
  for (auto& [key, c] : unique) poset->contexts_.push_back(std::move(c));
  auto& contexts = poset->contexts_;
  std::sort(contexts.begin(), contexts.end(), [](const Context& x, const Context& y) {
    if (x.rank() != y.rank()) return x.rank() > y.rank();
    return x.id < y.id;
  });

  const auto n = static_cast<ContextIndex>(contexts.size());
  poset->below_.resize(n);
  poset->restrictions_.resize(n);
  poset->above_.resize(n);
  poset->minimal_below_.resize(n);
  poset->maximal_above_.resize(n);
  for (ContextIndex v = 0; v < n; ++v) {
    poset->by_id_.emplace(contexts[v].id, v);
    for (ContextIndex w = v; w < n; ++w) {
      if (!poset->includes(v, w)) continue;
      poset->below_[v].push_back(w);
      poset->above_[w].push_back(v);
      std::vector<std::uint8_t> map;
      for (auto atom : contexts[v].atoms) {
        const auto& coarse = contexts[w].atoms;
        auto it = std::find_if(coarse.begin(), coarse.end(),
                               [&](ElementId b) { return poset->structure_->leq(atom, b); });
        map.push_back(static_cast<std::uint8_t>(it - coarse.begin()));
      }
      poset->restrictions_[v].push_back(std::move(map));
    }
  }
  for (ContextIndex v = 0; v < n; ++v) {
    if (poset->below_[v].size() == 1) poset->minimal_.push_back(v);
    if (poset->above_[v].size() == 1) poset->maximal_.push_back(v);
  }
  for (ContextIndex v = 0; v < n; ++v) {
    for (auto w : poset->below_[v]) {
      if (poset->below_[w].size() == 1) poset->minimal_below_[v].push_back(w);
    }
    for (auto u : poset->above_[v]) {
      if (poset->above_[u].size() == 1) poset->maximal_above_[v].push_back(u);
    }
  }
  return poset;
}

std::vector<std::pair<ContextIndex, ContextIndex>> hasse_edges(const ContextPoset& poset) {
  std::vector<std::pair<ContextIndex, ContextIndex>> edges;
  for (ContextIndex v = 0; v < poset.size(); ++v) {
    const auto& below = poset.below(v);
    for (auto w : below) {
      if (w == v) continue;
      bool covered = std::none_of(below.begin(), below.end(), [&](ContextIndex u) {
        return u != v && u != w && poset.includes(u, w);
      });
      if (covered) edges.emplace_back(v, w);
    }
  }
  return edges;
}

std::vector<ContextIndex> minimal_below(const ContextPoset& poset, ContextIndex v) {
  return poset.minimal_below(v);
}

std::vector<ContextIndex> maximal_above(const ContextPoset& poset, ContextIndex v) {
  return poset.maximal_above(v);
}

ElementId delta(const ContextPoset& poset, ElementId p, ContextIndex w) {
  const auto& s = poset.structure();
  const auto& target = poset.context(w);
  std::vector<ElementId> candidates;
  for (auto q : target.elements) {
    if (s.leq(p, q)) candidates.push_back(q);
  }
  for (auto c : candidates) {
    bool least = std::all_of(candidates.begin(), candidates.end(), [&](ElementId q) { return s.leq(c, q); });
    if (least) return c;
  }
  throw Error(ErrorCode::NoLeastUpperWitness,
              "no least element of " + target.id + " above " + s.label(p));
}

ElementId delta(const ContextPoset& poset, ContextIndex v, ContextIndex w, ElementId p) {
  if (!poset.includes(v, w)) {
    throw std::invalid_argument(poset.context(w).id + " is not contained in " + poset.context(v).id);
  }
  if (!poset.context(v).contains(p)) {
    throw std::invalid_argument(poset.structure().label(p) + " is not in " + poset.context(v).id);
  }
  return delta(poset, p, w);
}

}  // namespace biheyt
