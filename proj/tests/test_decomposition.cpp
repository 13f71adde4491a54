#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "inrl/axioms.hpp"
#include "inrl/decomposition.hpp"
#include "inrl/derived.hpp"
#include "inrl/errors.hpp"
#include "inrl/generators.hpp"
#include "inrl/isomorphism.hpp"
#include "inrl/partition.hpp"

using namespace inrl;

namespace {

std::set<std::string> names_of_ids(const FiniteInRL& alg, const std::vector<Elem>& ids) {
  std::set<std::string> out;
  for (Elem x : ids) out.insert(alg.name(x));
  return out;
}

// Atoms straight from the definition: c > 1 in A+ with nothing in A+
// strictly between.
std::vector<Elem> atoms_by_scan(const FiniteInRL& alg) {
  std::vector<Elem> out;
  const Elem one = alg.one();
  for (Elem c = 0; c < alg.size(); ++c) {
    if (c == one || !alg.leq(one, c)) continue;
    bool minimal = true;
    for (Elem d = 0; d < alg.size(); ++d)
      if (d != one && d != c && alg.leq(one, d) && alg.leq(d, c)) minimal = false;
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<FiniteInRL> test_algebras() {
  std::vector<FiniteInRL> algs{fixtures::a1(), fixtures::load("five_block.rlat")};
  for (std::size_t n = 0; n <= 5; ++n) algs.push_back(build_an(n));
  for (const auto& a : fixtures::corpus6().algebras) algs.push_back(a);
  return algs;
}

}  // namespace

TEST_CASE("atoms") {
  const auto a1 = fixtures::a1();
  const auto atoms = find_atoms(a1);
  REQUIRE(atoms.size() == 1);
  CHECK(a1.name(atoms[0]) == "c");
  CHECK(find_atoms(boolean_algebra(2)).empty());
  CHECK(find_atoms(boolean_algebra(0)).empty());
  CHECK_FALSE(find_atoms(build_an(2)).empty());
  for (const auto& alg : test_algebras()) CHECK(find_atoms(alg) == atoms_by_scan(alg));
}

TEST_CASE("complement of an atom") {
  const auto a1 = fixtures::a1();
  CHECK(a1.name(complement_of_atom(a1, a1.at("c"))) == "1");
  CHECK_THROWS_AS(complement_of_atom(a1, a1.at("a")), DecompositionError);
  CHECK(a1.name(complement_of_atom(a1, a1.at("top"))) == "c");
}

TEST_CASE("splitting A_1 at c") {
  const auto a1 = fixtures::a1();
  const auto s = split(a1, a1.at("c"));
  CHECK(s.lower_ids.size() == 8);
  CHECK(names_of_ids(a1, s.upper_ids) == std::set<std::string>{"0", "1"});
  CHECK(s.spec.lower.name(s.spec.a) == "c");
  CHECK(s.spec.upper.name(s.spec.b) == "0");
  REQUIRE(s.spec.phi.size() == 1);
  CHECK(s.spec.lower.name(s.spec.phi.begin()->first) == "c");
  CHECK(s.spec.upper.name(s.spec.phi.begin()->second) == "0");
  CHECK(s.spec.lower.name(s.spec.lower.one()) == "c");
  CHECK(s.spec.lower.name(s.spec.lower.zero()) == "-c");
  CHECK(verify_split(a1, s).ok());
  CHECK(equal_by_names(glue(s.spec).result, a1));
  CHECK_THROWS_AS(split(a1, a1.at("top")), DecompositionError);
}

TEST_CASE("splitting the five-block algebra recovers its two factors") {
  const auto five = fixtures::load("five_block.rlat");
  const auto atoms = find_atoms(five);
  REQUIRE_FALSE(atoms.empty());
  const auto s = split(five, atoms.front());
  CHECK(s.lower_ids.size() == 12);
  CHECK(s.upper_ids.size() == 12);
  std::set<std::string> below_1u, above_0v;
  for (Elem x = 0; x < five.size(); ++x) {
    if (five.mleq(x, five.at("1_u"))) below_1u.insert(five.name(x));
    if (five.mleq(five.at("0_v"), x)) above_0v.insert(five.name(x));
  }
  CHECK(names_of_ids(five, s.lower_ids) == below_1u);
  CHECK(names_of_ids(five, s.upper_ids) == above_0v);
  const auto expected = fixtures::five_block_spec();
  CHECK(equal_by_names(s.spec.lower, expected.lower));
  CHECK(equal_by_names(s.spec.upper, expected.upper));
  CHECK(names_of(s.spec) == names_of(expected));
  CHECK(verify_split(five, s).ok());
}

TEST_CASE("split lemmas at every atom") {
  for (const auto& alg : test_algebras())
    for (Elem c : find_atoms(alg)) {
      const auto s = split(alg, c);
      const auto r = verify_split(alg, s);
      for (const auto& check : r.checks()) CHECK_MESSAGE(check.passed, check.name);
    }
}

TEST_CASE("decomposition trees") {
  const auto four = boolean_algebra(2);
  const auto leaf = decompose(four);
  CHECK(leaf->is_leaf());
  CHECK(reassemble(leaf) == four);

  const auto a1 = fixtures::a1();
  const auto t = decompose(a1);
  std::vector<std::size_t> sizes;
  for (const auto& l : leaves(t)) sizes.push_back(l.size());
  CHECK(sizes == std::vector<std::size_t>{4, 4, 2});
  CHECK(isomorphic(reassemble(t), a1));
  CHECK(equal_by_names(reassemble(t), a1));

  for (std::size_t n = 0; n <= 5; ++n) {
    const auto an = build_an(n);
    const auto tree = decompose(an);
    CHECK(leaves(tree).size() == n + 2);
    CHECK(isomorphic(reassemble(tree), an));
  }
}

TEST_CASE("round trip over the corpus") {
  for (const auto& alg : test_algebras()) {
    const auto tree = decompose(alg);
    for (const auto& l : leaves(tree)) {
      CHECK(is_boolean(l));
      CHECK(validate(l).ok());
    }
    CHECK(isomorphic(reassemble(tree), alg));
  }
}

TEST_CASE("reassembly matches names, not element order") {
  const auto a1 = fixtures::a1();
  const auto t = decompose(a1);
  REQUIRE_FALSE(t->is_leaf());
  std::vector<Elem> reverse(t->upper->algebra.size());
  for (Elem i = 0; i < reverse.size(); ++i) reverse[i] = static_cast<Elem>(reverse.size() - 1 - i);
  const auto shuffled = make_node(t->algebra, *t->gluing, t->lower,
                                  make_leaf(t->upper->algebra.relabeled(reverse)));
  CHECK(equal_by_names(reassemble(shuffled), a1));
}

TEST_CASE("decompose rejects non-members") {
  auto bad = fixtures::a1();
  std::vector<Elem> fusion(bad.fusion_table().begin(), bad.fusion_table().end());
  std::vector<Elem> join(bad.join_table().begin(), bad.join_table().end());
  std::vector<Elem> neg(bad.neg_table().begin(), bad.neg_table().end());
  std::swap(neg[bad.at("a")], neg[bad.at("b")]);
  const FiniteInRL broken({bad.names().begin(), bad.names().end()}, join, fusion, neg, bad.one());
  CHECK_THROWS_AS(decompose(broken), DecompositionError);
}
