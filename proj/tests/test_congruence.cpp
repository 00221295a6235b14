#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spos/congruence.hpp"
#include "spos/constructions.hpp"
#include "spos/enumeration.hpp"

using namespace spos;
using fixtures::e;
using fixtures::one;

namespace {
  Relation pairs_relation(std::size_t n, std::vector<std::pair<elem, elem>> ps) {
    Relation r = Relation::identity(n);
    for (auto [a, b] : ps) {
      r.set(a, b);
    }
    return r;
  }
}  // namespace

TEST_CASE("chain order and alpha over SL2") {
  SPoset R = regular_right(fixtures::sl2());
  CHECK(chain_leq(R, pairs_relation(2, {{one, e}})) == pairs_relation(2, {{one, e}}));
  CHECK(alpha_of_H(R, {{one, e}}) == pairs_relation(2, {{one, e}}));
}

TEST_CASE("nu(1,e) over SL2") {
  SPoset R  = regular_right(fixtures::sl2());
  auto   nu = induced_congruence(R, {{one, e}});
  CHECK(nu.class_count() == 2);
  CHECK(nu.classes() == std::vector<std::vector<elem>>{{0}, {1}});
  CHECK(nu.class_leq()(0, 1));
  CHECK_FALSE(nu.class_leq()(1, 0));
  CHECK_FALSE(validate_congruence(R, nu));
  // Same partition as the identity, different order.
  CHECK(nu.same_partition(identity_congruence(R)));
  CHECK(nu != identity_congruence(R));

  SPoset Q = quotient(R, nu);
  CHECK(Q.size() == 2);
  CHECK(Q.leq(0, 1));
  CHECK(Q.act(0, e) == 1);
  auto pi = natural_map(nu);
  CHECK_FALSE(validate_map(R, Q, pi));
}

TEST_CASE("theta(1,e) over SL2 is a single class") {
  SPoset R     = regular_right(fixtures::sl2());
  auto   theta = generated_congruence(R, {{one, e}});
  CHECK(theta.class_count() == 1);
  CHECK(theta == full_congruence(R));
}

TEST_CASE("kernels of left translations") {
  Pomonoid S = fixtures::sl2();
  CHECK(ker_lambda(S, e) == full_congruence(regular_right(S)));
  CHECK(ker_lambda(S, one) == identity_congruence(regular_right(S)));
  CHECK(is_subannihilator(S, full_congruence(regular_right(S))));
  CHECK(subannihilator_witness(S, full_congruence(regular_right(S))) == elem{e});
  auto nu = induced_congruence(regular_right(S), {{one, e}});
  CHECK(congruence_leq(nu, ker_lambda(S, e)));
  CHECK_FALSE(congruence_leq(full_congruence(regular_right(S)), nu));
}

TEST_CASE("l-sets") {
  CHECK(l_set(fixtures::sl2(), one, e) == std::vector<elem>{e});
  CHECK(l_set(fixtures::z2(), 0, 1).empty());
  CHECK(l_set(fixtures::z2(), 0, 0) == std::vector<elem>{0, 1});
}

TEST_CASE("pairs outside the carrier are rejected") {
  SPoset R = regular_right(fixtures::sl2());
  CHECK_THROWS_AS(induced_congruence(R, {{0, 2}}), InputError);
}

TEST_CASE("from_classes and validation") {
  SPoset R = regular_right(fixtures::z2());
  // Identifying 1 with g is a congruence; ordering [1] < [g] without the
  // reverse is not compatible.
  CHECK_FALSE(validate_congruence(R, full_congruence(R)));
  Relation q(2);
  q.set(0, 0);
  q.set(1, 1);
  q.set(0, 1);
  auto c = OrderedCongruence::from_classes(2, {{0}, {1}}, q);
  CHECK(validate_congruence(R, c));
  CHECK_THROWS_AS(OrderedCongruence::from_classes(2, {{0}}, Relation::identity(1)),
                  InputError);
}

TEST_CASE("meet of congruences") {
  SPoset R  = regular_right(fixtures::sl2());
  auto   nu = induced_congruence(R, {{one, e}});
  CHECK(congruence_meet(nu, full_congruence(R)) == nu);
  CHECK(congruence_meet(nu, identity_congruence(R)) == identity_congruence(R));
}

TEST_CASE("all_congruences agrees with the brute-force list") {
  for (auto const& S : pomonoids_up_to(2)) {
    for (auto const& A : sposets_up_to(S, 3)) {
      auto got  = all_congruences(A);
      auto want = oracle::all_ordered_congruences(A);
      CHECK(got.size() == want.size());
      for (auto const& c : got) {
        CHECK_FALSE(validate_congruence(A, c));
      }
    }
  }
}

TEST_CASE("induced congruence is the least ordered congruence (small scope)") {
  auto sweep = oracle::congruence_sweep(2, 3);
  CHECK(sweep.instances > 0);
  CHECK_MESSAGE(sweep.mismatches == 0, sweep.first);
}
