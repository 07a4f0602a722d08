#include "biheyt/biheyting.hpp"

namespace biheyt {

namespace {

void require_same(const ClopenSubobject& s, const ClopenSubobject& t) {
  if (s.poset_ptr() != t.poset_ptr()) {
    throw Error(ErrorCode::PosetMismatch, "subobjects live over different context posets");
  }
}

void require_same(const PosetPtr& poset, const ClopenSubobject& s) {
  if (s.poset_ptr() != poset) {
    throw Error(ErrorCode::PosetMismatch, "subobject lives over a different context poset");
  }
}

ClopenSubobject trusted(const PosetPtr& poset, std::vector<AtomMask> components) {
  return ClopenSubobject(poset, std::move(components), detail::Unchecked{});
}

std::vector<AtomMask> full_masks(const ContextPoset& p) {
  std::vector<AtomMask> out;
  out.reserve(p.size());
  for (const auto& c : p.contexts()) out.push_back(c.full_mask());
  return out;
}

}  // namespace

bool leq(const ClopenSubobject& s, const ClopenSubobject& t) {
  require_same(s, t);
  for (ContextIndex v = 0; v < s.poset().size(); ++v) {
    if ((s.component(v) & ~t.component(v)) != 0) return false;
  }
  return true;
}

ClopenSubobject top(const PosetPtr& poset) { return trusted(poset, full_masks(*poset)); }

ClopenSubobject bottom(const PosetPtr& poset) {
  return trusted(poset, std::vector<AtomMask>(poset->size(), 0));
}

ClopenSubobject meet(const PosetPtr& poset, std::span<const ClopenSubobject> family) {
  auto out = full_masks(*poset);
  for (const auto& s : family) {
    require_same(poset, s);
    for (ContextIndex v = 0; v < out.size(); ++v) out[v] &= s.component(v);
  }
  return trusted(poset, std::move(out));
}

ClopenSubobject join(const PosetPtr& poset, std::span<const ClopenSubobject> family) {
  std::vector<AtomMask> out(poset->size(), 0);
  for (const auto& s : family) {
    require_same(poset, s);
    for (ContextIndex v = 0; v < out.size(); ++v) out[v] |= s.component(v);
  }
  return trusted(poset, std::move(out));
}

ClopenSubobject meet(const ClopenSubobject& s, const ClopenSubobject& t) {
  require_same(s, t);
  std::vector<AtomMask> out(s.components().begin(), s.components().end());
  for (ContextIndex v = 0; v < out.size(); ++v) out[v] &= t.component(v);
  return trusted(s.poset_ptr(), std::move(out));
}

ClopenSubobject join(const ClopenSubobject& s, const ClopenSubobject& t) {
  require_same(s, t);
  std::vector<AtomMask> out(s.components().begin(), s.components().end());
  for (ContextIndex v = 0; v < out.size(); ++v) out[v] |= t.component(v);
  return trusted(s.poset_ptr(), std::move(out));
}

ClopenSubobject heyting_implies(const ClopenSubobject& s, const ClopenSubobject& t) {
  require_same(s, t);
  const auto& p = s.poset();
  std::vector<AtomMask> out(p.size(), 0);
  for (ContextIndex v = 0; v < p.size(); ++v) {
    // atoms of V failing the implication at some V' ⊆ V
    AtomMask bad = 0;
    for (auto w : p.below(v)) {
      bad |= p.pull(v, w, s.component(w) & ~t.component(w));
    }
    out[v] = p.context(v).full_mask() & ~bad;
  }
  return trusted(s.poset_ptr(), std::move(out));
}

ClopenSubobject heyting_not(const ClopenSubobject& s) {
  const auto& p = s.poset();
  std::vector<AtomMask> out(p.size(), 0);
  for (ContextIndex v = 0; v < p.size(); ++v) {
    AtomMask covered = 0;
    for (auto w : p.minimal_below(v)) covered |= p.pull(v, w, s.component(w));
    out[v] = p.context(v).full_mask() & ~covered;
  }
  return trusted(s.poset_ptr(), std::move(out));
}

ClopenSubobject double_heyting_not(const ClopenSubobject& s) {
  const auto& p = s.poset();
  std::vector<AtomMask> out(p.size(), 0);
  for (ContextIndex v = 0; v < p.size(); ++v) {
    AtomMask common = p.context(v).full_mask();
    for (auto w : p.minimal_below(v)) common &= p.pull(v, w, s.component(w));
    out[v] = common;
  }
  return trusted(s.poset_ptr(), std::move(out));
}

ClopenSubobject coheyting_subtract(const ClopenSubobject& s, const ClopenSubobject& t) {
  require_same(s, t);
  const auto& p = s.poset();
  std::vector<AtomMask> out(p.size(), 0);
  for (ContextIndex v = 0; v < p.size(); ++v) {
    for (auto u : p.above(v)) out[v] |= p.push(u, v, s.component(u) & ~t.component(u));
  }
  return trusted(s.poset_ptr(), std::move(out));
}

ClopenSubobject coheyting_not(const ClopenSubobject& s) {
  const auto& p = s.poset();
  std::vector<AtomMask> out(p.size(), 0);
  for (ContextIndex v = 0; v < p.size(); ++v) {
    for (auto u : p.maximal_above(v)) {
      out[v] |= p.push(u, v, p.context(u).full_mask() & ~s.component(u));
    }
  }
  return trusted(s.poset_ptr(), std::move(out));
}

ClopenSubobject double_coheyting_not(const ClopenSubobject& s) {
  const auto& p = s.poset();
  std::vector<AtomMask> out(p.size(), 0);
  for (ContextIndex v = 0; v < p.size(); ++v) {
    for (auto u : p.maximal_above(v)) out[v] |= p.push(u, v, s.component(u));
  }
  return trusted(s.poset_ptr(), std::move(out));
}

bool is_heyting_regular(const ClopenSubobject& s) {
  const auto& p = s.poset();
  for (ContextIndex v = 0; v < p.size(); ++v) {
    AtomMask common = p.context(v).full_mask();
    for (auto w : p.minimal_below(v)) common &= p.pull(v, w, s.component(w));
    if (common != s.component(v)) return false;
  }
  return true;
}

bool is_coheyting_regular(const ClopenSubobject& s) {
  const auto& p = s.poset();
  for (ContextIndex v = 0; v < p.size(); ++v) {
    AtomMask reached = 0;
    for (auto u : p.maximal_above(v)) reached |= p.push(u, v, s.component(u));
    if (reached != s.component(v)) return false;
  }
  return true;
}

bool is_tight(const ClopenSubobject& s) {
  const auto& p = s.poset();
  for (ContextIndex v = 0; v < p.size(); ++v) {
    for (auto w : p.below(v)) {
      if (p.push(v, w, s.component(v)) != s.component(w)) return false;
    }
  }
  return true;
}

}  // namespace biheyt
