#include "doctest.h"

#include "fixtures.hpp"
#include "spos/constructions.hpp"
#include "spos/enumeration.hpp"

using namespace spos;
using fixtures::e;

TEST_CASE("regular S-posets") {
  Pomonoid S = fixtures::sl2_ordered();
  SPoset   R = regular_right(S);
  SPoset   L = regular_left(S);
  CHECK(R.size() == 2);
  CHECK(R.leq(e, 0));
  CHECK(L.side() == Side::left);
  CHECK(R.orbit(e) == std::vector<elem>{e});
}

TEST_CASE("ideals of SL2") {
  Pomonoid S = fixtures::sl2();
  CHECK(is_right_ideal(S, {e}));
  CHECK_FALSE(is_right_ideal(S, {0}));
  CHECK(principal_right_ideal(S, e) == std::vector<elem>{e});
  CHECK(principal_left_ideal(S, 0) == std::vector<elem>{0, 1});
  CHECK(right_ideals(S) == std::vector<std::vector<elem>>{{0, 1}, {1}});
  auto I = right_ideal_poset(S, {e});
  CHECK(I.poset.size() == 1);
  CHECK_FALSE(validate_map(I.poset, regular_right(S), I.inclusion()));
}

TEST_CASE("A(eS) over SL2") {
  Pomonoid S = fixtures::sl2();
  auto     A = amalgam(S, {e});
  REQUIRE(A.poset.size() == 3);
  elem x = A.index_of(AmalgamTag::x, 0);
  elem y = A.index_of(AmalgamTag::y, 0);
  elem z = A.index_of(AmalgamTag::z, e);
  CHECK(A.poset.act(x, e) == z);
  CHECK(A.poset.act(y, e) == z);
  CHECK(A.poset.act(z, 0) == z);
  CHECK_THROWS_AS(A.index_of(AmalgamTag::z, 0), InputError);
  CHECK_THROWS_AS(amalgam(S, {0, 1}), InputError);
  CHECK_THROWS_AS(amalgam(S, {0}), InputError);
}

TEST_CASE("cyclic subposets") {
  Pomonoid S = fixtures::sl2();
  auto     A = amalgam(S, {e});
  auto     C = cyclic_subposet(A.poset, A.index_of(AmalgamTag::x, 0));
  CHECK(C.poset.size() == 2);
  CHECK(cyclic_subposet(regular_right(S), 0).poset.size() == 2);
  SPoset Th = one_point(S);
  CHECK(cyclic_subposet(Th, 0).poset.size() == 1);
}

TEST_CASE("products, powers and the diagonal") {
  Pomonoid S = fixtures::sl2_ordered();
  SPoset   R = regular_right(S);
  SPoset   P = product({R, R});
  CHECK(P.size() == 4);
  CHECK(power(S, 2) == P);
  CHECK(power(S, 1) == R);
  auto c = product_coordinates({R, R}, product_index({R, R}, {1, 0}));
  CHECK(c == std::vector<elem>{1, 0});
  CHECK_FALSE(validate_map(P, R, projection({R, R}, 1)));
  SPoset D = diagonal(S);
  CHECK(D.size() == 4);
  CHECK(D.act(product_index({R, R}, {0, e}), e) == product_index({R, R}, {e, e}));
  CHECK_THROWS_AS(product({}), InputError);
  CHECK_THROWS_AS(product({R, regular_right(fixtures::z2())}), InputError);
}

TEST_CASE("coproduct") {
  Pomonoid S = fixtures::sl2();
  SPoset   C = coproduct(regular_right(S), one_point(S));
  CHECK(C.size() == 3);
  CHECK(C.act(2, e) == 2);
  CHECK_FALSE(C.leq(0, 2));
}

TEST_CASE("every A(I) over small pomonoids is an S-poset") {
  for (auto const& S : pomonoids_up_to(3)) {
    for (auto const& I : right_ideals(S)) {
      if (I.size() < S.size()) {
        CHECK_NOTHROW(amalgam(S, I));
      }
    }
  }
}
