#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "inrl/generators.hpp"
#include "inrl/isomorphism.hpp"

using namespace inrl;

TEST_CASE("A_1 is isomorphic to any relabeling of itself") {
  const auto a1 = fixtures::a1();
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    std::vector<Elem> perm(a1.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto b = a1.relabeled(perm);
    const auto map = find_isomorphism(a1, b);
    REQUIRE(map);
    CHECK(is_isomorphism(a1, b, *map));
    const auto back = find_isomorphism(b, a1);
    REQUIRE(back);
    CHECK(is_isomorphism(b, a1, *back));
  }
}

TEST_CASE("different sizes are never isomorphic") {
  CHECK_FALSE(find_isomorphism(boolean_algebra(1), boolean_algebra(2)));
  CHECK_FALSE(find_isomorphism(boolean_algebra(2), boolean_algebra(1)));
}

TEST_CASE("A_1 built by gluing matches the fixture") {
  const auto built = build_an(1);
  const auto a1 = fixtures::a1();
  const auto map = find_isomorphism(built, a1);
  REQUIRE(map);
  CHECK(is_isomorphism(built, a1, *map));
}

TEST_CASE("non-isomorphic members of equal size are told apart") {
  const auto& corpus = fixtures::corpus6();
  for (std::size_t i = 0; i < corpus.algebras.size(); ++i)
    for (std::size_t j = 0; j < corpus.algebras.size(); ++j) {
      const bool iso = isomorphic(corpus.algebras[i], corpus.algebras[j]);
      CHECK(iso == (i == j));
      CHECK(iso == isomorphic(corpus.algebras[j], corpus.algebras[i]));
    }
}

TEST_CASE("Boolean algebras with many automorphisms") {
  const auto b = boolean_algebra(6);
  std::vector<Elem> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(3);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto c = b.relabeled(perm);
  const auto map = find_isomorphism(b, c);
  REQUIRE(map);
  CHECK(is_isomorphism(b, c, *map));
}

TEST_CASE("name matching") {
  const auto a1 = fixtures::a1();
  std::vector<Elem> perm(a1.size());
  std::iota(perm.rbegin(), perm.rend(), 0);
  const auto r = a1.relabeled(perm);
  CHECK(equal_by_names(a1, r));
  CHECK(equal_by_names(r, a1));
  std::vector<std::string> names(a1.names().begin(), a1.names().end());
  std::swap(names[1], names[6]);
  CHECK_FALSE(equal_by_names(a1, a1.renamed(names)));
  CHECK(isomorphic(a1, a1.renamed(names)));
  CHECK_FALSE(name_matching(a1, boolean_algebra(1)));
  CHECK_FALSE(is_isomorphism(a1, a1, std::vector<Elem>(a1.size(), 0)));
}
