#include "biheyt/presheaf.hpp"

#include <algorithm>
#include <stdexcept>

namespace biheyt {

std::vector<SpectrumPoint> spectrum(const ContextPoset& poset, ContextIndex v) {
  std::vector<SpectrumPoint> points;
  for (auto atom : poset.context(v).atoms) points.push_back({v, atom});
  return points;
}

SpectrumPoint restrict(const ContextPoset& poset, const SpectrumPoint& point, ContextIndex w) {
  const auto& atoms = poset.context(point.context).atoms;
  auto it = std::find(atoms.begin(), atoms.end(), point.atom);
  if (it == atoms.end()) throw std::invalid_argument("point is not an atom of its context");
  auto r = poset.restriction(point.context, w);
  return {w, poset.context(w).atoms[r[static_cast<std::size_t>(it - atoms.begin())]]};
}

AtomMask alpha(const ContextPoset& poset, ContextIndex v, ElementId p) {
  const auto& c = poset.context(v);
  if (!c.contains(p)) {
    throw std::invalid_argument(poset.structure().label(p) + " is not in context " + c.id);
  }
  AtomMask out = 0;
  for (std::size_t i = 0; i < c.atoms.size(); ++i) {
    if (poset.structure().leq(c.atoms[i], p)) out |= AtomMask{1} << i;
  }
  return out;
}

ElementId alpha_inv(const ContextPoset& poset, ContextIndex v, AtomMask atoms) {
  return poset.context(v).element(atoms);
}

ElementId ClopenSubobject::projection(ContextIndex v) const {
  return poset_->context(v).element(components_[v]);
}

std::string describe(const ClopenSubobject& s) {
  const auto& p = s.poset();
  std::string out = "(";
  for (ContextIndex v = 0; v < p.size(); ++v) {
    if (v) out += ", ";
    out += p.context(v).id + ":" + p.structure().label(s.projection(v));
  }
  return out + ")";
}

ClopenSubobject make_subobject(PosetPtr poset, std::vector<AtomMask> components) {
  const auto& p = *poset;
  if (components.size() != p.size()) {
    throw Error(ErrorCode::NotASubobject, "expected one component per context");
  }
  for (ContextIndex v = 0; v < p.size(); ++v) {
    if ((components[v] & ~p.context(v).full_mask()) != 0) {
      throw Error(ErrorCode::NotASubobject, "component outside context " + p.context(v).id);
    }
  }
  for (ContextIndex v = 0; v < p.size(); ++v) {
    for (auto w : p.below(v)) {
      if (w == v) continue;
      if ((p.push(v, w, components[v]) & ~components[w]) != 0) {
        const auto& s = p.structure();
        throw Error(ErrorCode::NotASubobject,
                    "P at " + p.context(w).id + " (" + s.label(p.context(w).element(components[w])) +
                        ") is not above P at " + p.context(v).id + " (" +
                        s.label(p.context(v).element(components[v])) + ")");
      }
    }
  }
  return ClopenSubobject(std::move(poset), std::move(components), detail::Unchecked{});
}

ClopenSubobject make_subobject(PosetPtr poset, std::span<const ElementId> projections) {
  if (projections.size() != poset->size()) {
    throw Error(ErrorCode::NotASubobject, "expected one projection per context");
  }
  std::vector<AtomMask> components;
  for (ContextIndex v = 0; v < poset->size(); ++v) {
    auto m = poset->context(v).mask_of(projections[v]);
    if (!m) {
      throw Error(ErrorCode::NotASubobject, poset->structure().label(projections[v]) +
                                                " is not in context " + poset->context(v).id);
    }
    components.push_back(*m);
  }
  return make_subobject(std::move(poset), std::move(components));
}

ClopenSubobject make_subobject(PosetPtr poset, const std::map<std::string, ElementId>& by_context) {
  std::vector<ElementId> projections(poset->size());
  std::vector<bool> assigned(poset->size(), false);
  for (const auto& [id, e] : by_context) {
    auto v = poset->at(id);
    projections[v] = e;
    assigned[v] = true;
  }
  for (ContextIndex v = 0; v < poset->size(); ++v) {
    if (!assigned[v]) {
      throw Error(ErrorCode::NotASubobject, "no projection for context " + poset->context(v).id);
    }
  }
  return make_subobject(std::move(poset), projections);
}

std::vector<ClopenSubobject> enumerate_subobjects(const PosetPtr& poset, std::size_t max_count) {
  const auto& p = *poset;
  const auto n = static_cast<ContextIndex>(p.size());
  std::vector<ClopenSubobject> out;
  std::vector<AtomMask> chosen(n, 0);

  // Supersets precede their subsets in index order, so the lower bound at v
  // is fixed once every earlier context is chosen.
  auto visit = [&](auto&& self, ContextIndex v) -> void {
    if (v == n) {
      if (out.size() >= max_count) {
        throw Error(ErrorCode::SizeGuard,
                    "more than " + std::to_string(max_count) + " clopen subobjects");
      }
      out.emplace_back(poset, chosen, detail::Unchecked{});
      return;
    }
    AtomMask lower = 0;
    for (auto u : p.above(v)) {
      if (u != v) lower |= p.push(u, v, chosen[u]);
    }
    const AtomMask free = p.context(v).full_mask() & ~lower;
    AtomMask extra = 0;
    do {
      chosen[v] = lower | extra;
      self(self, v + 1);
      extra = (extra - free) & free;
    } while (extra != 0);
  };
  visit(visit, 0);
  return out;
}

RestrictionImage restriction_image_projection(const ClopenSubobject& s, ContextIndex v, ContextIndex w) {
  const auto& p = s.poset();
  RestrictionImage r;
  r.image = p.context(w).element(p.push(v, w, s.component(v)));
  r.coarse_grained = delta(p, v, w, s.projection(v));
  if (r.image != r.coarse_grained) {
    throw std::logic_error("restriction image and coarse-graining disagree at " + p.context(v).id +
                           " -> " + p.context(w).id);
  }
  return r;
}

SectionSearch global_sections(const ContextPoset& poset, std::uint64_t node_budget) {
  constexpr std::uint8_t unset = 0xff;
  const auto& maximal = poset.maximal();
  std::vector<std::uint8_t> value(poset.size(), unset);
  std::vector<ContextIndex> trail;
  SectionSearch result;

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == maximal.size()) {
      GlobalSection section;
      for (ContextIndex v = 0; v < poset.size(); ++v) {
        section.atoms.push_back(poset.context(v).atoms[value[v]]);
      }
      for (ContextIndex v = 0; v < poset.size(); ++v) {
        for (auto w : poset.below(v)) {
          if (poset.restriction(v, w)[value[v]] != value[w]) {
            throw std::logic_error("global section fails compatibility at " + poset.context(v).id);
          }
        }
      }
      result.sections.push_back(std::move(section));
      return;
    }
    const auto v = maximal[depth];
    const auto& below = poset.below(v);
    for (std::uint8_t atom = 0; atom < poset.context(v).rank(); ++atom) {
      if (++result.nodes > node_budget) {
        throw Error(ErrorCode::SizeGuard,
                    "global section search exceeded " + std::to_string(node_budget) + " nodes");
      }
      const auto mark = trail.size();
      bool consistent = true;
      for (auto w : below) {
        auto forced = poset.restriction(v, w)[atom];
        if (value[w] == unset) {
          value[w] = forced;
          trail.push_back(w);
        } else if (value[w] != forced) {
          consistent = false;
          break;
        }
      }
      if (consistent) self(self, depth + 1);
      while (trail.size() > mark) {
        value[trail.back()] = unset;
        trail.pop_back();
      }
    }
  };
  search(search, 0);
  return result;
}

}  // namespace biheyt
