#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::string> ids(const ContextPoset& p, const std::vector<ContextIndex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(p.context(v).id);
  std::sort(out.begin(), out.end());
  return out;
}

// Bell numbers count set partitions; dropping the one-cell partition gives
// the nontrivial Boolean subalgebras of a Boolean algebra with n atoms.
std::size_t bell(unsigned n) {
  std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, 0));
  t[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    t[i][0] = t[i - 1][i - 1];
    for (unsigned j = 1; j <= i; ++j) t[i][j] = t[i][j - 1] + t[i - 1][j - 1];
  }
  return t[n][0];
}

}  // namespace

TEST_CASE("context counts") {
  CHECK(poset_of("boolean:2")->size() == 1);
  CHECK(poset_of("boolean:3")->size() == 4);
  for (unsigned n = 2; n <= 6; ++n) CHECK(poset_of("boolean:" + std::to_string(n))->size() == bell(n) - 1);
  CHECK(poset_of("mo:2")->size() == 2);
  CHECK(poset_of("mo:5")->size() == 5);
  // 9 blocks of 4 atoms, Bell(4) - 1 = 14 each, with the 18 shared {v, v'}
  // contexts counted twice
  CHECK(poset_of("cabello18")->size() == 9 * 14 - 18);
}

TEST_CASE("context ids and order") {
  auto p = poset_of("boolean:3");
  CHECK(p->context(0).id == "p|q|r");
  CHECK(p->context(1).id == "p|p'");
  CHECK(p->context(2).id == "q|q'");
  CHECK(p->context(3).id == "r|r'");
  CHECK(p->at("q|q'") == 2);
  CHECK_FALSE(p->find("p|q"));
  CHECK_THROWS_AS(p->at("p|q"), Error);
}

TEST_CASE("minimal_below and maximal_above") {
  auto p = poset_of("boolean:3");
  auto top = p->at("p|q|r");
  auto vp = p->at("p|p'");
  auto vq = p->at("q|q'");
  CHECK(ids(*p, minimal_below(*p, top)) == std::vector<std::string>{"p|p'", "q|q'", "r|r'"});
  CHECK(ids(*p, minimal_below(*p, vp)) == std::vector<std::string>{"p|p'"});
  CHECK(ids(*p, maximal_above(*p, vq)) == std::vector<std::string>{"p|q|r"});
  CHECK(ids(*p, maximal_above(*p, top)) == std::vector<std::string>{"p|q|r"});

  auto mo = poset_of("mo:2");
  auto a = mo->at("a|a'");
  CHECK(ids(*mo, minimal_below(*mo, a)) == std::vector<std::string>{"a|a'"});
  CHECK_FALSE(mo->includes(a, mo->at("b|b'")));
  CHECK_FALSE(mo->includes(mo->at("b|b'"), a));

  auto cab = poset_of("cabello18");
  auto shared = cab->at("v1|v1'");
  CHECK(ids(*cab, maximal_above(*cab, shared)) ==
        std::vector<std::string>{"v1|v2|v3|v4", "v1|v5|v6|v7"});
}

TEST_CASE("inclusion structure is consistent") {
  for (auto name : {"boolean:3", "boolean:4", "mo:3", "cabello18"}) {
    auto p = poset_of(name);
    for (ContextIndex v = 0; v < p->size(); ++v) {
      // supersets come first
      for (auto w : p->below(v)) CHECK(w >= v);
      for (auto u : p->above(v)) CHECK(u <= v);
      CHECK(std::find(p->below(v).begin(), p->below(v).end(), v) != p->below(v).end());
      for (ContextIndex w = 0; w < p->size(); ++w) {
        bool listed = std::find(p->below(v).begin(), p->below(v).end(), w) != p->below(v).end();
        CHECK(listed == p->includes(v, w));
        CHECK(listed == p->context(w).members.is_subset_of(p->context(v).members));
      }
    }
    for (auto [hi, lo] : hasse_edges(*p)) {
      CHECK(p->includes(hi, lo));
      CHECK(lo != hi);
    }
  }
}

TEST_CASE("every context is the Boolean algebra generated by its atoms") {
  for (auto name : {"boolean:4", "mo:3", "cabello18"}) {
    auto p = poset_of(name);
    const auto& s = p->structure();
    for (const auto& c : p->contexts()) {
      CHECK(c.rank() >= 2);
      CHECK(c.elements.size() == (std::size_t{1} << c.rank()));
      for (AtomMask m = 0; m <= c.full_mask(); ++m) {
        auto e = c.element(m);
        for (std::size_t i = 0; i < c.rank(); ++i) CHECK(s.leq(c.atoms[i], e) == (((m >> i) & 1) != 0));
        CHECK(c.element(c.full_mask() & ~m) == s.ortho(e));
        CHECK(c.mask_of(e) == m);
      }
    }
  }
}

TEST_CASE("delta examples") {
  auto p = poset_of("boolean:3");
  const auto& s = p->structure();
  auto top = p->at("p|q|r");
  auto vq = p->at("q|q'");
  CHECK(s.label(delta(*p, top, vq, s.at("p"))) == "q'");
  CHECK(s.label(delta(*p, top, vq, s.at("q"))) == "q");
  CHECK(s.label(delta(*p, top, vq, s.at("r'"))) == "1");
  CHECK(s.label(delta(*p, top, vq, s.at("q'"))) == "q'");
  CHECK(s.label(delta(*p, top, vq, s.at("p'"))) == "1");
  for (auto e : p->context(top).elements) CHECK(delta(*p, top, top, e) == e);
  for (ContextIndex w = 0; w < p->size(); ++w) CHECK(delta(*p, top, w, s.bottom()) == s.bottom());
  CHECK_THROWS_AS(delta(*p, vq, top, s.at("q")), std::invalid_argument);
  CHECK_THROWS_AS(delta(*p, vq, vq, s.at("p")), std::invalid_argument);

  auto cab = poset_of("cabello18");
  auto block = cab->at("v13|v14|v2|v5");
  CHECK_THROWS_AS(delta(*cab, cab->structure().at("v1"), block), Error);
}

TEST_CASE("delta properties") {
  for (auto name : {"boolean:3", "boolean:4", "mo:3", "cabello18"}) {
    auto p = poset_of(name);
    const auto& s = p->structure();
    for (ContextIndex v = 0; v < p->size(); ++v) {
      const auto& elems = p->context(v).elements;
      for (auto w : p->below(v)) {
        for (auto x : elems) {
          auto dx = delta(*p, v, w, x);
          CHECK(dx == least_above(*p, w, x));
          CHECK(s.leq(x, dx));
          for (auto y : elems) {
            if (s.leq(x, y)) CHECK(s.leq(dx, delta(*p, v, w, y)));
            // joins inside V are the block joins
            auto jm = *p->context(v).mask_of(x) | *p->context(v).mask_of(y);
            auto dj = delta(*p, v, w, p->context(v).element(jm));
            auto jd = *p->context(w).mask_of(dx) | *p->context(w).mask_of(delta(*p, v, w, y));
            CHECK(dj == p->context(w).element(jd));
          }
        }
        for (auto u : p->below(w)) {
          for (auto x : elems) CHECK(delta(*p, v, u, x) == delta(*p, w, u, delta(*p, v, w, x)));
        }
      }
    }
  }
}

TEST_CASE("push and pull are adjoint") {
  auto p = poset_of("boolean:4");
  for (ContextIndex v = 0; v < p->size(); ++v) {
    for (auto w : p->below(v)) {
      for (AtomMask m = 0; m <= p->context(v).full_mask(); ++m) {
        for (AtomMask n = 0; n <= p->context(w).full_mask(); ++n) {
          bool pushed_in = (p->push(v, w, m) & ~n) == 0;
          bool pulled_in = (m & ~p->pull(v, w, n)) == 0;
          CHECK(pushed_in == pulled_in);
        }
      }
    }
  }
}

TEST_CASE("context size guard") {
  Limits tight;
  tight.max_contexts = 10;
  CHECK_THROWS_AS(enumerate_contexts(std::make_shared<const OrthoStructure>(generate("boolean", 4)), tight), Error);
}
