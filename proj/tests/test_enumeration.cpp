#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spos/constructions.hpp"
#include "spos/enumeration.hpp"

using namespace spos;

TEST_CASE("partial order counts") {
  std::vector<std::size_t> want{1, 1, 3, 19, 219, 4231};
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(all_partial_orders(n).size() == want[n]);
  }
}

TEST_CASE("pomonoid and monoid counts") {
  CHECK(enumerate_pomonoids(1).size() == 1);
  CHECK(enumerate_pomonoids(2).size() == 4);
  CHECK(enumerate_monoids(2).size() == 2);
  CHECK(enumerate_monoids(3).size() == 7);
  CHECK(enumerate_pomonoids(3).size() == 37);
}

TEST_CASE("counts agree with exhaustive tables and an isomorphism filter") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(enumerate_monoids(n).size() == oracle::brute_count(n, false));
    CHECK(enumerate_pomonoids(n).size() == oracle::brute_count(n, true));
  }
}

TEST_CASE("catalogs do not depend on the worker count") {
  auto one = enumerate_pomonoids(3, 1);
  for (std::size_t w : {2, 3, 5}) {
    auto other = enumerate_pomonoids(3, w);
    REQUIRE(other.size() == one.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(other.entries[i].key == one.entries[i].key);
      CHECK(other.entries[i].structure == one.entries[i].structure);
    }
  }
  Pomonoid S = fixtures::sl2();
  CHECK(enumerate_sposets(S, 3, 1).size() == enumerate_sposets(S, 3, 4).size());
}

TEST_CASE("canonical keys are invariant under relabelling") {
  std::mt19937_64 rng(7);
  for (auto const& S : pomonoids_up_to(3)) {
    std::vector<elem> p(S.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin() + 1, p.end(), rng);
    Pomonoid T = relabel(S, p);
    CHECK(canonical_key(T) == canonical_key(S));
    CHECK(are_isomorphic(S, T));
    for (auto const& A : sposets_up_to(S, 3)) {
      std::vector<elem> q(A.size());
      std::iota(q.begin(), q.end(), 0);
      std::shuffle(q.begin(), q.end(), rng);
      SPoset B = relabel(A, q);
      CHECK(canonical_key(B) == canonical_key(A));
      auto iso = are_isomorphic(A, B);
      REQUIRE(iso);
      CHECK(relabel(A, iso.permutation) == B);
    }
  }
}

TEST_CASE("catalog entries are pairwise non-isomorphic") {
  auto cat = enumerate_pomonoids(3);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      CHECK_FALSE(are_isomorphic(cat.entries[i].structure, cat.entries[j].structure));
    }
  }
}

TEST_CASE("S-posets over the trivial monoid are posets") {
  Pomonoid T = Pomonoid::trivial();
  std::vector<std::size_t> want{0, 1, 2, 5, 16};
  for (std::size_t m = 1; m <= 4; ++m) {
    CHECK(enumerate_sposets(T, m).size() == want[m]);
  }
}

TEST_CASE("left and right S-posets over a commutative monoid match") {
  Pomonoid S = fixtures::z2();
  CHECK(enumerate_sposets(S, 3, 1, Side::left).size()
        == enumerate_sposets(S, 3, 1, Side::right).size());
}

TEST_CASE("scope caps") {
  CHECK_THROWS_AS(enumerate_pomonoids(0), InputError);
  CHECK_THROWS_AS(enumerate_pomonoids(kMaxPomonoidOrder + 1), InputError);
  CHECK_THROWS_AS(enumerate_sposets(fixtures::sl2(), kMaxSPosetSize + 1), InputError);
}
