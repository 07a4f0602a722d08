#ifndef BIHEYT_ORACLE_HPP
#define BIHEYT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "biheyt/presheaf.hpp"

namespace biheyt {

/// Reference implementations by literal scans over every clopen subobject.
class Oracle {
 public:
  Oracle(PosetPtr poset, std::size_t max_subobjects);

  const PosetPtr& poset() const { return poset_; }
  const std::vector<ClopenSubobject>& universe() const { return universe_; }

  /// ⋁{R | R ∧ S ≤ T}
  ClopenSubobject heyting_implies(const ClopenSubobject& s, const ClopenSubobject& t) const;
  /// ⋀{R | S ≤ T ∨ R}
  ClopenSubobject coheyting_subtract(const ClopenSubobject& s, const ClopenSubobject& t) const;
  /// (largest R with R ∧ S = 0, smallest R with R ∨ S = Σ). Throws
  /// std::logic_error if the scanned family has no such extremum.
  std::pair<ClopenSubobject, ClopenSubobject> negations(const ClopenSubobject& s) const;

 private:
  PosetPtr poset_;
  std::vector<ClopenSubobject> universe_;
};

ClopenSubobject brute_heyting_implies(const Oracle& oracle, const ClopenSubobject& s, const ClopenSubobject& t);
ClopenSubobject brute_coheyting_subtract(const Oracle& oracle, const ClopenSubobject& s, const ClopenSubobject& t);
std::pair<ClopenSubobject, ClopenSubobject> brute_negations(const Oracle& oracle, const ClopenSubobject& s);

/// The operations under test. `production()` wires in the library formulas;
/// tests swap in corrupted variants to make sure the checks can fail.
struct Operations {
  using Binary = std::function<ClopenSubobject(const ClopenSubobject&, const ClopenSubobject&)>;
  using Unary = std::function<ClopenSubobject(const ClopenSubobject&)>;

  Binary implies;
  Binary subtract;
  Unary heyting_not;
  Unary coheyting_not;
  Unary double_heyting_not;
  Unary double_coheyting_not;

  static Operations production();
};

struct LawResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

struct LawReport {
  bool sampled = false;
  std::size_t universe_size = 0;
  std::vector<LawResult> laws;

  bool passed() const;
  const LawResult* find(std::string_view name) const;
};

/// Above this many subobjects the triple-wise checks refuse to run.
inline constexpr std::size_t kMaxTripleUniverse = 400;

/// Both adjunctions over every triple of the universe.
LawReport check_adjunctions(std::span<const ClopenSubobject> universe,
                            const Operations& ops = Operations::production());
LawReport check_adjunctions(const Oracle& oracle, const Operations& ops = Operations::production());

/// Adjunctions, both distributive laws, extremality of both negations,
/// triple-negation stability, ¬S ≤ ∼S, the double-negation sandwich and
/// closed forms, and tight ⟹ bi-regular. With `sampled` set the family is a
/// random sample and extremality is checked only against its members.
LawReport check_laws(std::span<const ClopenSubobject> universe, bool sampled,
                     const Operations& ops = Operations::production());

/// Production operations against the brute-force definitions, pairwise.
LawReport check_oracle_agreement(const Oracle& oracle, const Operations& ops = Operations::production());

/// A uniformly random choice at each context among the components allowed
/// by the contexts already fixed (not uniform over subobjects).
ClopenSubobject random_subobject(const PosetPtr& poset, std::mt19937_64& rng);
std::vector<ClopenSubobject> sample_subobjects(const PosetPtr& poset, std::size_t count, std::uint64_t seed);

}  // namespace biheyt

#endif
