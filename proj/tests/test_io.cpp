#include "doctest.h"

#include <filesystem>

#include "fixtures.hpp"
#include "spos/constructions.hpp"
#include "spos/io.hpp"

using namespace spos;
using io::json;

TEST_CASE("round trip") {
  Pomonoid S = fixtures::sl2_ordered();
  CHECK(io::pomonoid_from_json(io::to_json(S)) == S);
  SPoset A = amalgam(S, {1}).poset;
  CHECK(io::sposet_from_json(io::to_json(A)) == A);
  SPoset L = regular_left(S);
  CHECK(io::sposet_from_json(io::to_json(L)) == L);
}

TEST_CASE("identity is moved to 0") {
  // e = 0, 1 = 1 in the file.
  json j = json::parse(R"({"kind":"pomonoid","size":2,"mul":[[0,0],[0,1]],"order":[]})");
  Pomonoid S = io::pomonoid_from_json(j);
  CHECK(S == fixtures::sl2());
  json a = json::parse(R"({"kind":"sposet","side":"right","size":2,
      "monoid":{"kind":"pomonoid","size":2,"mul":[[0,0],[0,1]],"order":[]},
      "act":[[1,0],[1,1]],"order":[]})");
  SPoset A = io::sposet_from_json(a);
  // Columns follow the monoid relabelling: a·1 = a.
  CHECK(A.act(0, 0) == 0);
  CHECK(A.act(0, 1) == 1);
}

TEST_CASE("errors carry positions and axioms") {
  try {
    io::parse_json("{\n  \"size\": 2,\n  oops\n}", "mem");
    FAIL("expected an error");
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).rfind("mem:3:", 0) == 0);
  }
  CHECK_THROWS_AS(io::pomonoid_from_json(json::parse(R"({"size":2,"mul":[[0,1]]})")),
                  InputError);
  CHECK_THROWS_AS(
      io::pomonoid_from_json(json::parse(R"({"size":2,"mul":[[0,1],[1,0]],"order":[[0,1],[1,0]]})")),
      ValidationError);
  CHECK_THROWS_AS(io::load(fixtures::data("missing.json")), InputError);
}

TEST_CASE("data files") {
  auto S = io::load_pomonoid(fixtures::data("sl2.json"));
  CHECK(S == fixtures::sl2());
  auto A = io::load_sposet(fixtures::data("amalgam_sl2.json"));
  CHECK(A == amalgam(S, {1}).poset);
  CHECK(io::load_sposet(fixtures::data("nu1e_quotient.json")).size() == 2);
  CHECK_THROWS_AS(io::load_sposet(fixtures::data("sl2.json")), InputError);
}

TEST_CASE("congruence files") {
  auto c = io::congruence_from_json(json::parse(R"({"classes":[[0],[1]],"class_order":[[0,1]]})"), 2);
  CHECK(c.below(0, 1));
  CHECK(io::to_json(c) == json::parse(R"({"classes":[[0],[1]],"class_order":[[0,1]]})"));
}

TEST_CASE("catalog files") {
  auto dir = std::filesystem::temp_directory_path() / "spos-io-test";
  std::filesystem::remove_all(dir);
  io::save_catalog(dir, enumerate_pomonoids(2), "pomonoid");
  auto index = io::read_json(dir / "pomonoid-index.json");
  CHECK(index["count"] == 4);
  CHECK(index["entries"].size() == 4);
  CHECK(index["entries"][0].contains("flags"));
  CHECK(std::filesystem::exists(dir / "pomonoid-0003.json"));
  std::filesystem::remove_all(dir);
}
