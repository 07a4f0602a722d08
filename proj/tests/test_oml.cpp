#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

OrthoStructure boolean4_explicit() {
  return validate({{"0", "p", "p'", "1"}, {}, {{"0", "1"}, {"p", "p'"}}});
}

OrthoStructure benzene() {
  return validate({{"0", "a", "b", "b'", "a'", "1"}, {{"a", "b"}, {"b'", "a'"}}, {{"0", "1"}, {"a", "a'"}, {"b", "b'"}}});
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

std::set<std::set<std::string>> block_atom_sets(const OrthoStructure& s) {
  std::set<std::set<std::string>> out;
  for (const auto& b : s.blocks()) {
    std::set<std::string> atoms;
    for (auto a : b.atoms) atoms.insert(s.label(a));
    out.insert(atoms);
  }
  return out;
}

// Every structure we ship or generate, small enough for pairwise scans.
std::vector<OrthoStructure> zoo() {
  return {boolean4_explicit(), generate("boolean", 3), generate("boolean", 4), generate("mo", 2),
          generate("mo", 3), generate("cabello18")};
}

}  // namespace

TEST_CASE("validate accepts Boolean 2^2 and MO(2)") {
  auto b = boolean4_explicit();
  CHECK(b.size() == 4);
  CHECK(b.kind() == Kind::lattice);
  CHECK(b.label(b.bottom()) == "0");
  CHECK(b.label(b.top()) == "1");

  auto mo = validate({{"0", "a", "a'", "b", "b'", "1"}, {}, {{"0", "1"}, {"a", "a'"}, {"b", "b'"}}});
  CHECK(mo.kind() == Kind::lattice);
  CHECK(mo.blocks().size() == 2);
}

TEST_CASE("validate rejects the benzene ring") {
  CHECK(code_of([] { benzene(); }) == ErrorCode::OrthomodularityViolated);
}

TEST_CASE("validate error codes") {
  // a <= b <= a with a != b
  CHECK(code_of([] { validate({{"0", "a", "b", "1"}, {{"a", "b"}, {"b", "a"}}, {{"0", "1"}, {"a", "b"}}}); }) ==
        ErrorCode::NotAPartialOrder);
  // ortho not an involution: a' = b but b' = b
  CHECK(code_of([] {
          validate({{"0", "a", "b", "1"}, {}, {{"0", "1"}, {"1", "0"}, {"a", "b"}, {"b", "b"}}});
        }) == ErrorCode::OrthoNotInvolutive);
  CHECK(code_of([] { validate({{"0", "1"}, {}, {{"0", "1"}}}); }) == ErrorCode::DegenerateStructure);
  CHECK(code_of([] { validate({{"0", "a", "1"}, {{"a", "zz"}}, {{"0", "1"}}}); }) == ErrorCode::UnknownElement);
  // two incomparable elements above a and b with no 1 between them
  CHECK(code_of([] {
          validate({{"0", "a", "b", "c", "d", "c'", "d'", "a'", "b'", "1"},
                    {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c'", "a'"}, {"d'", "a'"}, {"c'", "b'"},
                     {"d'", "b'"}},
                    {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}, {"d", "d'"}}});
        }) == ErrorCode::UnboundedPair);
  CHECK(code_of([] { generate("boolean", 1); }) == ErrorCode::DegenerateStructure);
  CHECK(code_of([] { generate("boolean", 11); }) == ErrorCode::SizeGuard);
  CHECK(code_of([] { generate("mo", 0); }) == ErrorCode::DegenerateStructure);
  CHECK(code_of([] { generate("nonsense"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { boolean4_explicit().at("nope"); }) == ErrorCode::UnknownElement);
}

TEST_CASE("canonical labels") {
  CHECK(generate("boolean", 3).labels() == std::vector<std::string>{"0", "p", "q", "r", "p'", "q'", "r'", "1"});
  CHECK(generate("mo", 2).labels() == std::vector<std::string>{"0", "a", "a'", "b", "b'", "1"});
  auto b4 = generate("boolean", 4);
  CHECK(b4.find("p+q"));
  CHECK(b4.find("r+s"));
  CHECK_FALSE(b4.find("(p+q)'"));
  CHECK(b4.find("s'"));
  CHECK_FALSE(b4.find("q+p"));
}

TEST_CASE("commutes") {
  auto mo = generate("mo", 2);
  auto a = mo.at("a");
  auto b = mo.at("b");
  CHECK(commutes(mo, a, mo.ortho(a)));
  CHECK_FALSE(commutes(mo, a, b));
  CHECK(commutes(mo, a, mo.top()));
  CHECK(commutes(mo, a, mo.bottom()));

  auto b3 = generate("boolean", 3);
  for (ElementId x = 0; x < b3.size(); ++x) {
    for (ElementId y = 0; y < b3.size(); ++y) CHECK(commutes(b3, x, y));
  }
}

TEST_CASE("blocks") {
  auto b3 = generate("boolean", 3);
  REQUIRE(b3.blocks().size() == 1);
  CHECK(b3.blocks()[0].id == "p|q|r");
  CHECK(b3.blocks()[0].elements.size() == 8);

  auto mo = generate("mo", 2);
  CHECK(block_atom_sets(mo) == std::set<std::set<std::string>>{{"a", "a'"}, {"b", "b'"}});

  auto cab = generate("cabello18");
  CHECK(cab.blocks().size() == 9);
  for (const auto& b : cab.blocks()) CHECK(b.rank() == 4);
}

TEST_CASE("from_greechie") {
  auto b2 = from_greechie({{"a", "b"}});
  CHECK(b2.size() == 4);
  CHECK(b2.kind() == Kind::lattice);

  auto mo = from_greechie({{"a1", "a2"}, {"b1", "b2"}});
  CHECK(mo.size() == 6);
  CHECK(mo.kind() == Kind::lattice);
  CHECK_FALSE(commutes(mo, mo.at("a1"), mo.at("b1")));

  // blocks recover the input
  std::set<std::set<std::string>> input;
  for (const auto& basis : cabello18_bases()) input.insert({basis.begin(), basis.end()});
  CHECK(block_atom_sets(generate("cabello18")) == input);

  std::vector<std::vector<std::string>> l3 = {{"x", "y", "z"}, {"z", "u", "w"}};
  CHECK(block_atom_sets(from_greechie(l3)) == std::set<std::set<std::string>>{{"x", "y", "z"}, {"u", "w", "z"}});
}

TEST_CASE("generate sizes") {
  CHECK(generate("boolean", 2).size() == 4);
  CHECK(generate("boolean", 5).size() == 32);
  CHECK(generate("mo", 3).size() == 8);
  CHECK(generate("mo", 3).blocks().size() == 3);

  auto cab = generate("cabello18");
  CHECK(cab.kind() == Kind::pasted);
  std::map<std::string, int> incidence;
  for (const auto& b : cab.blocks()) {
    for (auto a : b.atoms) ++incidence[cab.label(a)];
  }
  CHECK(incidence.size() == 18);
  for (const auto& [atom, count] : incidence) CHECK_MESSAGE(count == 2, atom);
}

TEST_CASE("every input basis of the Cabello set is orthonormal-compatible") {
  // independent check on the vectors themselves
  const std::map<std::string, std::array<int, 4>> vec = {
      {"v1", {0, 0, 0, 1}},  {"v2", {0, 0, 1, 0}},   {"v3", {1, 1, 0, 0}},   {"v4", {1, -1, 0, 0}},
      {"v5", {0, 1, 0, 0}},  {"v6", {1, 0, 1, 0}},   {"v7", {1, 0, -1, 0}},  {"v8", {1, -1, 1, -1}},
      {"v9", {1, -1, -1, 1}}, {"v10", {0, 0, 1, 1}}, {"v11", {1, 1, 1, 1}},  {"v12", {0, 1, 0, -1}},
      {"v13", {1, 0, 0, 1}}, {"v14", {1, 0, 0, -1}}, {"v15", {0, 1, -1, 0}}, {"v16", {1, 1, -1, 1}},
      {"v17", {1, 1, 1, -1}}, {"v18", {-1, 1, 1, 1}}};
  for (const auto& basis : cabello18_bases()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        const auto& x = vec.at(basis[i]);
        const auto& y = vec.at(basis[j]);
        CHECK(x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3] == 0);
      }
    }
  }
}

TEST_CASE("ortho is an order-reversing involution") {
  for (const auto& s : zoo()) {
    for (ElementId x = 0; x < s.size(); ++x) {
      CHECK(s.ortho(s.ortho(x)) == x);
      for (ElementId y = 0; y < s.size(); ++y) CHECK(s.leq(x, y) == s.leq(s.ortho(y), s.ortho(x)));
    }
  }
}

TEST_CASE("orthomodular law on lattice-kind structures") {
  for (const auto& s : zoo()) {
    if (s.kind() != Kind::lattice) continue;
    for (ElementId a = 0; a < s.size(); ++a) {
      CHECK(s.meet(a, s.ortho(a)) == s.bottom());
      CHECK(s.join(a, s.ortho(a)) == s.top());
      for (ElementId b = 0; b < s.size(); ++b) {
        if (!s.leq(a, b)) continue;
        CHECK(s.join(a, *s.meet(b, s.ortho(a))) == b);
      }
    }
  }
}

TEST_CASE("blockwise operations agree with global meet and join") {
  for (const auto& s : zoo()) {
    for (const auto& b : s.blocks()) {
      for (AtomMask m = 0; m <= b.full_mask(); ++m) {
        for (AtomMask n = 0; n <= b.full_mask(); ++n) {
          auto x = b.element_of_mask[m];
          auto y = b.element_of_mask[n];
          CHECK(s.leq(x, y) == ((m & ~n) == 0));
          if (s.kind() != Kind::lattice) continue;
          CHECK(s.meet(x, y) == b.element_of_mask[m & n]);
          CHECK(s.join(x, y) == b.element_of_mask[m | n]);
        }
      }
    }
  }
}

TEST_CASE("every element lies in a block") {
  for (const auto& s : zoo()) {
    for (ElementId x = 0; x < s.size(); ++x) {
      bool found = std::any_of(s.blocks().begin(), s.blocks().end(), [&](const Block& b) { return b.members.test(x); });
      CHECK(found);
    }
  }
}
