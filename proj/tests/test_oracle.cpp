#include "doctest.h"
#include "support.hpp"
#include "biheyt/oracle.hpp"

using namespace testing;

TEST_CASE("brute-force operations on trivial inputs") {
  auto p = poset_of("boolean:3");
  Oracle oracle(p, 1000);
  REQUIRE(oracle.universe().size() == 95);
  auto sigma = top(p);
  auto zero = bottom(p);
  for (const auto& s : oracle.universe()) {
    CHECK(brute_heyting_implies(oracle, s, s) == sigma);
    CHECK(brute_heyting_implies(oracle, sigma, s) == s);
    CHECK(brute_coheyting_subtract(oracle, s, s) == zero);
    CHECK(brute_coheyting_subtract(oracle, s, zero) == s);
  }
  CHECK(brute_negations(oracle, sigma) == std::pair{zero, zero});
  CHECK(brute_negations(oracle, zero) == std::pair{sigma, sigma});
}

TEST_CASE("oracle agrees with production formulas") {
  for (auto name : {"boolean:3", "mo:2", "mo:3"}) {
    Oracle oracle(poset_of(name), 1000);
    auto report = check_oracle_agreement(oracle);
    CHECK(report.passed());
    for (const auto& law : report.laws) CHECK_MESSAGE(law.failures == 0, law.name);
    REQUIRE(report.find("implies_matches_oracle"));
    CHECK(report.find("implies_matches_oracle")->checked == oracle.universe().size() * oracle.universe().size());
    REQUIRE(report.find("heyting_not_matches_oracle"));
    CHECK(report.find("heyting_not_matches_oracle")->checked == oracle.universe().size());
  }
}

TEST_CASE("adjunctions hold exhaustively") {
  for (auto name : {"boolean:3", "mo:2"}) {
    Oracle oracle(poset_of(name), 1000);
    auto report = check_adjunctions(oracle);
    CHECK(report.passed());
    auto n = oracle.universe().size();
    CHECK(report.find("heyting_adjunction")->checked == n * n * n);
    CHECK(report.find("coheyting_adjunction")->checked == n * n * n);
  }
}

TEST_CASE("full law suite") {
  Oracle oracle(poset_of("boolean:3"), 1000);
  auto report = check_laws(oracle.universe(), false);
  CHECK_FALSE(report.sampled);
  CHECK(report.passed());
  for (auto name : {"meet_distributes_over_join", "join_distributes_over_meet", "heyting_not_extremal",
                    "coheyting_not_extremal", "triple_heyting_not", "triple_coheyting_not",
                    "heyting_not_below_coheyting_not", "tight_implies_biregular"}) {
    REQUIRE_MESSAGE(report.find(name), name);
    CHECK(report.find(name)->checked > 0);
  }
}

TEST_CASE("corrupted operations are caught") {
  auto p = poset_of("boolean:3");
  Oracle oracle(p, 1000);

  auto broken = Operations::production();
  broken.implies = [](const ClopenSubobject& s, const ClopenSubobject& t) {
    // drop the lower contexts from the implication
    auto good = heyting_implies(s, t);
    std::vector<AtomMask> m(good.components().begin(), good.components().end());
    m.front() = good.poset().context(0).full_mask();
    return ClopenSubobject(good.poset_ptr(), m, detail::Unchecked{});
  };
  auto adj = check_adjunctions(oracle, broken);
  CHECK_FALSE(adj.passed());
  const auto* law = adj.find("heyting_adjunction");
  REQUIRE(law);
  CHECK(law->failures > 0);
  CHECK(law->counterexample.find("R=(") == 0);
  CHECK(adj.find("coheyting_adjunction")->passed());
  CHECK_FALSE(check_oracle_agreement(oracle, broken).find("implies_matches_oracle")->passed());

  auto wrong_not = Operations::production();
  wrong_not.coheyting_not = [](const ClopenSubobject& s) { return heyting_not(s); };
  auto laws = check_laws(oracle.universe(), false, wrong_not);
  CHECK_FALSE(laws.passed());
  CHECK_FALSE(laws.find("coheyting_not_extremal")->passed());

  auto wrong_sub = Operations::production();
  wrong_sub.subtract = [](const ClopenSubobject& s, const ClopenSubobject& t) {
    return meet(s, heyting_not(t));
  };
  CHECK_FALSE(check_adjunctions(oracle, wrong_sub).find("coheyting_adjunction")->passed());
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(Oracle(poset_of("boolean:4"), 1000), Error);
  auto p = poset_of("mo:5");
  auto universe = enumerate_subobjects(p, 2000);
  REQUIRE(universe.size() > kMaxTripleUniverse);
  CHECK_THROWS_AS(check_adjunctions(universe), Error);
}

TEST_CASE("sampling is seeded and yields valid subobjects") {
  auto p = poset_of("cabello18");
  auto a = sample_subobjects(p, 30, 11);
  auto b = sample_subobjects(p, 30, 11);
  CHECK(a == b);
  for (const auto& s : a) {
    CHECK_NOTHROW(make_subobject(p, std::vector<AtomMask>(s.components().begin(), s.components().end())));
  }
  auto report = check_laws(a, true);
  CHECK(report.sampled);
  CHECK(report.passed());
}
