#include "biheyt/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "biheyt/biheyting.hpp"

namespace biheyt {

Oracle::Oracle(PosetPtr poset, std::size_t max_subobjects)
  : poset_(std::move(poset)), universe_(enumerate_subobjects(poset_, max_subobjects)) {}

ClopenSubobject Oracle::heyting_implies(const ClopenSubobject& s, const ClopenSubobject& t) const {
  std::vector<ClopenSubobject> qualifying;
  for (const auto& r : universe_) {
    if (leq(meet(r, s), t)) qualifying.push_back(r);
  }
  return join(poset_, qualifying);
}

ClopenSubobject Oracle::coheyting_subtract(const ClopenSubobject& s, const ClopenSubobject& t) const {
  std::vector<ClopenSubobject> qualifying;
  for (const auto& r : universe_) {
    if (leq(s, join(t, r))) qualifying.push_back(r);
  }
  return meet(poset_, qualifying);
}

std::pair<ClopenSubobject, ClopenSubobject> Oracle::negations(const ClopenSubobject& s) const {
  const auto zero = bottom(poset_);
  const auto sigma = top(poset_);
  std::vector<const ClopenSubobject*> disjoint;
  std::vector<const ClopenSubobject*> covering;
  for (const auto& r : universe_) {
    if (meet(r, s) == zero) disjoint.push_back(&r);
    if (join(r, s) == sigma) covering.push_back(&r);
  }
  auto largest = std::find_if(disjoint.begin(), disjoint.end(), [&](const ClopenSubobject* c) {
    return std::all_of(disjoint.begin(), disjoint.end(), [&](const ClopenSubobject* r) { return leq(*r, *c); });
  });
  auto smallest = std::find_if(covering.begin(), covering.end(), [&](const ClopenSubobject* c) {
    return std::all_of(covering.begin(), covering.end(), [&](const ClopenSubobject* r) { return leq(*c, *r); });
  });
  if (largest == disjoint.end() || smallest == covering.end()) {
    throw std::logic_error("scanned family has no extremal negation for " + describe(s));
  }
  return {**largest, **smallest};
}

ClopenSubobject brute_heyting_implies(const Oracle& oracle, const ClopenSubobject& s, const ClopenSubobject& t) {
  return oracle.heyting_implies(s, t);
}

ClopenSubobject brute_coheyting_subtract(const Oracle& oracle, const ClopenSubobject& s,
                                         const ClopenSubobject& t) {
  return oracle.coheyting_subtract(s, t);
}

std::pair<ClopenSubobject, ClopenSubobject> brute_negations(const Oracle& oracle, const ClopenSubobject& s) {
  return oracle.negations(s);
}

Operations Operations::production() {
  Operations ops;
  ops.implies = [](const ClopenSubobject& s, const ClopenSubobject& t) { return biheyt::heyting_implies(s, t); };
  ops.subtract = [](const ClopenSubobject& s, const ClopenSubobject& t) { return biheyt::coheyting_subtract(s, t); };
  ops.heyting_not = [](const ClopenSubobject& s) { return biheyt::heyting_not(s); };
  ops.coheyting_not = [](const ClopenSubobject& s) { return biheyt::coheyting_not(s); };
  ops.double_heyting_not = [](const ClopenSubobject& s) { return biheyt::double_heyting_not(s); };
  ops.double_coheyting_not = [](const ClopenSubobject& s) { return biheyt::double_coheyting_not(s); };
  return ops;
}

bool LawReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed(); });
}

const LawResult* LawReport::find(std::string_view name) const {
  for (const auto& law : laws) {
    if (law.name == name) return &law;
  }
  return nullptr;
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void record(bool ok, Describe&& describe_failure) {
    ++result_.checked;
    if (ok) return;
    if (result_.failures++ == 0) result_.counterexample = describe_failure();
  }

  LawResult take() { return std::move(result_); }

 private:
  LawResult result_;
};

// Pairwise meets, joins and both implications over a fixed family.
class PairTable {
 public:
  PairTable(std::span<const ClopenSubobject> universe, const Operations& ops) : n_(universe.size()) {
    if (n_ > kMaxTripleUniverse) {
      throw Error(ErrorCode::SizeGuard, "triple-wise checks need at most " +
                                            std::to_string(kMaxTripleUniverse) + " subobjects, got " +
                                            std::to_string(n_));
    }
    meets_.reserve(n_ * n_);
    joins_.reserve(n_ * n_);
    implies_.reserve(n_ * n_);
    subtracts_.reserve(n_ * n_);
    for (const auto& a : universe) {
      for (const auto& b : universe) {
        meets_.push_back(meet(a, b));
        joins_.push_back(join(a, b));
        implies_.push_back(ops.implies(a, b));
        subtracts_.push_back(ops.subtract(a, b));
      }
    }
  }

  const ClopenSubobject& meet_of(std::size_t i, std::size_t j) const { return meets_[i * n_ + j]; }
  const ClopenSubobject& join_of(std::size_t i, std::size_t j) const { return joins_[i * n_ + j]; }
  const ClopenSubobject& implies(std::size_t i, std::size_t j) const { return implies_[i * n_ + j]; }
  const ClopenSubobject& subtract(std::size_t i, std::size_t j) const { return subtracts_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<ClopenSubobject> meets_;
  std::vector<ClopenSubobject> joins_;
  std::vector<ClopenSubobject> implies_;
  std::vector<ClopenSubobject> subtracts_;
};

std::string triple_text(const ClopenSubobject& r, const ClopenSubobject& s, const ClopenSubobject& t) {
  return "R=" + describe(r) + " S=" + describe(s) + " T=" + describe(t);
}

void adjunction_laws(std::span<const ClopenSubobject> u, const PairTable& table, LawReport& report) {
  Tally heyting("heyting_adjunction");
  Tally coheyting("coheyting_adjunction");
  const auto n = u.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        // R ∧ S ≤ T  iff  R ≤ (S ⇒ T)
        heyting.record(leq(table.meet_of(r, s), u[t]) == leq(u[r], table.implies(s, t)),
                       [&] { return triple_text(u[r], u[s], u[t]); });
        // (S ⇐ T) ≤ R  iff  S ≤ T ∨ R
        coheyting.record(leq(table.subtract(s, t), u[r]) == leq(u[s], table.join_of(t, r)),
                         [&] { return triple_text(u[r], u[s], u[t]); });
      }
    }
  }
  report.laws.push_back(heyting.take());
  report.laws.push_back(coheyting.take());
}

}  // namespace

LawReport check_adjunctions(std::span<const ClopenSubobject> universe, const Operations& ops) {
  LawReport report;
  report.universe_size = universe.size();
  PairTable table(universe, ops);
  adjunction_laws(universe, table, report);
  return report;
}

LawReport check_adjunctions(const Oracle& oracle, const Operations& ops) {
  return check_adjunctions(oracle.universe(), ops);
}

LawReport check_laws(std::span<const ClopenSubobject> u, bool sampled, const Operations& ops) {
  LawReport report;
  report.sampled = sampled;
  report.universe_size = u.size();
  if (u.empty()) return report;
  const auto& poset = u.front().poset_ptr();
  const auto zero = bottom(poset);
  const auto sigma = top(poset);
  const auto n = u.size();

  PairTable table(u, ops);
  adjunction_laws(u, table, report);

  Tally meet_dist("meet_distributes_over_join");
  Tally join_dist("join_distributes_over_meet");
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t r = 0; r < n; ++r) {
        meet_dist.record(meet(u[s], table.join_of(t, r)) == join(table.meet_of(s, t), table.meet_of(s, r)),
                         [&] { return triple_text(u[r], u[s], u[t]); });
        join_dist.record(join(u[s], table.meet_of(t, r)) == meet(table.join_of(s, t), table.join_of(s, r)),
                         [&] { return triple_text(u[r], u[s], u[t]); });
      }
    }
    // the whole family at once
    std::vector<ClopenSubobject> meets_with;
    std::vector<ClopenSubobject> joins_with;
    for (const auto& r : u) {
      meets_with.push_back(meet(u[s], r));
      joins_with.push_back(join(u[s], r));
    }
    meet_dist.record(meet(u[s], join(poset, u)) == join(poset, meets_with), [&] { return "S=" + describe(u[s]); });
    join_dist.record(join(u[s], meet(poset, u)) == meet(poset, joins_with), [&] { return "S=" + describe(u[s]); });
  }
  report.laws.push_back(meet_dist.take());
  report.laws.push_back(join_dist.take());

  Tally neg_extremal("heyting_not_extremal");
  Tally coneg_extremal("coheyting_not_extremal");
  Tally neg_is_implies("heyting_not_equals_implies_bottom");
  Tally coneg_is_subtract("coheyting_not_equals_top_subtract");
  Tally triple_neg("triple_heyting_not");
  Tally triple_coneg("triple_coheyting_not");
  Tally double_neg("double_heyting_not_closed_form");
  Tally double_coneg("double_coheyting_not_closed_form");
  Tally neg_below("heyting_not_below_coheyting_not");
  Tally sandwich("double_negation_sandwich");
  Tally tight_regular("tight_implies_biregular");
  Tally valid("results_are_subobjects");

  auto is_valid = [](const ClopenSubobject& x) {
    try {
      make_subobject(x.poset_ptr(), std::vector<AtomMask>(x.components().begin(), x.components().end()));
      return true;
    } catch (const Error&) {
      return false;
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = u[i];
    auto text = [&] { return "S=" + describe(s); };
    auto neg = ops.heyting_not(s);
    auto coneg = ops.coheyting_not(s);
    auto neg2 = ops.heyting_not(neg);
    auto coneg2 = ops.coheyting_not(coneg);

    bool neg_max = meet(neg, s) == zero;
    bool coneg_min = join(coneg, s) == sigma;
    for (std::size_t j = 0; j < n && (neg_max || coneg_min); ++j) {
      if (table.meet_of(j, i) == zero && !leq(u[j], neg)) neg_max = false;
      if (table.join_of(j, i) == sigma && !leq(coneg, u[j])) coneg_min = false;
    }
    neg_extremal.record(neg_max, text);
    coneg_extremal.record(coneg_min, text);
    neg_is_implies.record(neg == ops.implies(s, zero), text);
    coneg_is_subtract.record(coneg == ops.subtract(sigma, s), text);
    triple_neg.record(ops.heyting_not(neg2) == neg, text);
    triple_coneg.record(ops.coheyting_not(coneg2) == coneg, text);
    double_neg.record(ops.double_heyting_not(s) == neg2, text);
    double_coneg.record(ops.double_coheyting_not(s) == coneg2, text);
    neg_below.record(leq(neg, coneg), text);
    sandwich.record(leq(coneg2, s) && leq(s, neg2), text);
    tight_regular.record(!is_tight(s) || (is_heyting_regular(s) && is_coheyting_regular(s)), text);
    valid.record(is_valid(neg) && is_valid(coneg), text);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      valid.record(is_valid(table.implies(i, j)) && is_valid(table.subtract(i, j)),
                   [&] { return "S=" + describe(u[i]) + " T=" + describe(u[j]); });
    }
  }
  for (auto* t : {&neg_extremal, &coneg_extremal, &neg_is_implies, &coneg_is_subtract, &triple_neg,
                  &triple_coneg, &double_neg, &double_coneg, &neg_below, &sandwich, &tight_regular, &valid}) {
    report.laws.push_back(t->take());
  }
  return report;
}

LawReport check_oracle_agreement(const Oracle& oracle, const Operations& ops) {
  LawReport report;
  const auto& u = oracle.universe();
  report.universe_size = u.size();
  Tally implies("implies_matches_oracle");
  Tally subtract("subtract_matches_oracle");
  Tally neg("heyting_not_matches_oracle");
  Tally coneg("coheyting_not_matches_oracle");
  for (const auto& s : u) {
    for (const auto& t : u) {
      auto text = [&] { return "S=" + describe(s) + " T=" + describe(t); };
      implies.record(ops.implies(s, t) == oracle.heyting_implies(s, t), text);
      subtract.record(ops.subtract(s, t) == oracle.coheyting_subtract(s, t), text);
    }
    auto [brute_neg, brute_coneg] = oracle.negations(s);
    neg.record(ops.heyting_not(s) == brute_neg, [&] { return "S=" + describe(s); });
    coneg.record(ops.coheyting_not(s) == brute_coneg, [&] { return "S=" + describe(s); });
  }
  for (auto* t : {&implies, &subtract, &neg, &coneg}) report.laws.push_back(t->take());
  return report;
}

ClopenSubobject random_subobject(const PosetPtr& poset, std::mt19937_64& rng) {
  const auto& p = *poset;
  std::vector<AtomMask> chosen(p.size(), 0);
  for (ContextIndex v = 0; v < p.size(); ++v) {
    AtomMask lower = 0;
    for (auto u : p.above(v)) {
      if (u != v) lower |= p.push(u, v, chosen[u]);
    }
    chosen[v] = lower | (rng() & p.context(v).full_mask());
  }
  return ClopenSubobject(poset, std::move(chosen), detail::Unchecked{});
}

std::vector<ClopenSubobject> sample_subobjects(const PosetPtr& poset, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ClopenSubobject> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_subobject(poset, rng));
  return out;
}

}  // namespace biheyt
