#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spos/constructions.hpp"
#include "spos/enumeration.hpp"
#include "spos/tensor.hpp"

using namespace spos;
using fixtures::e;

TEST_CASE("A(eS) tensor S over SL2 has three classes") {
  Pomonoid S = fixtures::sl2();
  auto     A = amalgam(S, {e});
  auto     T = tensor(A.poset, regular_left(S));
  CHECK(T.class_count() == 3);
  elem x = A.index_of(AmalgamTag::x, 0);
  elem y = A.index_of(AmalgamTag::y, 0);
  elem z = A.index_of(AmalgamTag::z, e);
  CHECK(T.class_of(x, 0) != T.class_of(y, 0));
  CHECK(T.class_of(z, 0) == T.class_of(x, e));
  CHECK(T.class_of(z, 0) == T.class_of(y, e));
  // Distinct classes are incomparable.
  CHECK(T.class_leq().strict_pairs().empty());
}

TEST_CASE("A(eS) tensor Se over SL2 has one class") {
  Pomonoid S  = fixtures::sl2();
  auto     A  = amalgam(S, {e});
  auto     Se = left_ideal_poset(S, principal_left_ideal(S, e));
  CHECK(Se.poset.size() == 1);
  CHECK(tensor(A.poset, Se.poset).class_count() == 1);
  CHECK(canonical_embedding_test(A.poset, {e}).holds);
}

TEST_CASE("S tensor B is B") {
  for (auto const& S : pomonoids_up_to(2)) {
    SPoset R = regular_right(S);
    for (auto const& B : sposets_up_to(S, 3, 1, Side::left)) {
      auto T = tensor(R, B);
      REQUIRE(T.class_count() == B.size());
      for (elem b = 0; b < B.size(); ++b) {
        for (elem b2 = 0; b2 < B.size(); ++b2) {
          CHECK(T.leq(0, b, 0, b2) == B.leq(b, b2));
        }
      }
    }
  }
}

TEST_CASE("certificates replay and convert to schemes") {
  for (auto const& S : pomonoids_up_to(2)) {
    auto rights = sposets_up_to(S, 2);
    auto lefts  = sposets_up_to(S, 2, 1, Side::left);
    for (auto const& A : rights) {
      for (auto const& B : lefts) {
        auto T = tensor(A, B);
        for (elem a = 0; a < A.size(); ++a) {
          for (elem b = 0; b < B.size(); ++b) {
            for (elem a2 = 0; a2 < A.size(); ++a2) {
              for (elem b2 = 0; b2 < B.size(); ++b2) {
                auto cert = tensor_leq_certificate(T, a, b, a2, b2);
                CHECK(cert.has_value() == T.leq(a, b, a2, b2));
                if (cert) {
                  CHECK(replay(A, B, *cert));
                  CHECK(verify_scheme(A, B, to_scheme(*cert), {a, b}, {a2, b2}));
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("monotone in the first argument") {
  Pomonoid S = fixtures::sl2_ordered();
  SPoset   R = regular_right(S);
  SPoset   L = regular_left(S);
  auto     T = tensor(R, L);
  for (elem a = 0; a < 2; ++a) {
    for (elem a2 = 0; a2 < 2; ++a2) {
      for (elem b = 0; b < 2; ++b) {
        if (R.leq(a, a2)) {
          CHECK(T.leq(a, b, a2, b));
        }
      }
    }
  }
}

TEST_CASE("sides are checked") {
  Pomonoid S = fixtures::sl2();
  CHECK_THROWS_AS(tensor(regular_right(S), regular_right(S)), InputError);
  CHECK_THROWS_AS(canonical_embedding_test(regular_right(S), {}), InputError);
}

TEST_CASE("tensor order equals scheme search (small scope)") {
  auto sweep = oracle::tensor_sweep(2, 3);
  CHECK(sweep.instances > 0);
  CHECK_MESSAGE(sweep.mismatches == 0, sweep.first);
}
