#include "doctest.h"

#include "fixtures.hpp"
#include "spos/io.hpp"
#include "spos/verify.hpp"

using namespace spos;
using verify::json;
using verify::Scope;

namespace {
  Scope small(std::size_t order = 2, std::size_t poset = 2) {
    Scope s;
    s.max_order = order;
    s.max_poset = poset;
    return s;
  }
}  // namespace

TEST_CASE("registered tags") {
  auto const& tags = verify::tags();
  for (char const* t : {"CYCPROJ", "MONO-SF-PROJ", "MAINE", "REGULAR-TFAE", "PTF-TFAE",
                        "GEN-TFAE", "WPOFLAT-TFAE", "IREG-TFAE", "COR-SI", "COR-IDEALS",
                        "WRR-COLLAPSE", "WLCOHERE", "IMPLICATIONS", "RETRACT-TRANSFER"}) {
    CHECK(std::find(tags.begin(), tags.end(), t) != tags.end());
  }
  CHECK_THROWS_AS(verify::run("NO-SUCH-TAG", small()), InputError);
}

TEST_CASE("scope checks") {
  Scope s = small();
  s.max_order = 5;
  CHECK_THROWS_AS(verify::run("CYCPROJ", s), InputError);
  s = small();
  s.power_cap = 0;
  CHECK_THROWS_AS(verify::run("CYCPROJ", s), InputError);
  s = small();
  s.workers = 0;
  CHECK_THROWS_AS(verify::run("CYCPROJ", s), InputError);
}

TEST_CASE("CYCPROJ and REGULAR-TFAE at order 2") {
  auto c = verify::run("CYCPROJ", small(2, 3));
  CHECK(c.passed());
  // The trivial monoid plus the four pomonoids of order 2.
  CHECK(c.pomonoids == 5);
  auto r = verify::run("REGULAR-TFAE", small(2, 3));
  CHECK(r.passed());
  CHECK(r.instances > 0);
}

TEST_CASE("MAINE records the partition reading of nu(1,e) over SL2") {
  auto rep = verify::run("MAINE", small(2, 2));
  CHECK(rep.passed());
  auto sl2 = io::to_json(fixtures::sl2());
  bool seen = false;
  for (auto const& f : rep.findings) {
    if (f["pomonoid"] == sl2 && f["pair"] == json::array({0, 1})) {
      seen = true;
      CHECK(f["ordered"] == false);
      CHECK(f["partition"] == true);
      CHECK(verify::replay(f).reproduced);
    }
  }
  CHECK(seen);
}

TEST_CASE("reports are deterministic across worker counts") {
  Scope a = small(3, 2);
  Scope b = a;
  b.workers = 3;
  auto ra = verify::run_all(verify::tags(), a);
  auto rb = verify::run_all(verify::tags(), b);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    CHECK(ra[i].text() == rb[i].text());
  }
}

TEST_CASE("report text layout") {
  auto        rep  = verify::run("IMPLICATIONS", small(2, 2));
  std::string text = rep.text();
  CHECK(text.rfind("report theorem=IMPLICATIONS max_order=2 max_poset=2 power_cap=2 seed=0\n", 0) == 0);
  CHECK(text.find("\nsummary theorem=IMPLICATIONS pomonoids=5 ") != std::string::npos);
  CHECK(text.find("note evidence=bounded") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("RETRACT-TRANSFER uses the seed") {
  Scope s   = small(2, 2);
  s.samples = 50;
  auto r0   = verify::run("RETRACT-TRANSFER", s);
  CHECK(r0.passed());
  CHECK(r0.instances == 50);
  s.seed  = 1;
  auto r1 = verify::run("RETRACT-TRANSFER", s);
  CHECK(r1.passed());
  CHECK(r0.text() != r1.text());
}

TEST_CASE("replay confirms true claims and rejects false ones") {
  SPoset R = io::sposet_from_json(io::read_json(fixtures::data("nu1e_quotient.json")));
  json   claim{{"kind", "sposet"},
               {"property", "condition-e"},
               {"holds", false},
               {"witness", {0, 0, 1}},
               {"structure", io::to_json(R)}};
  json record{{"tag", "MAINE"}, {"evidence", json::array({claim})}};
  CHECK(verify::replay(record).reproduced);
  CHECK(verify::replay_line("violation " + record.dump()).reproduced);

  json wrong = record;
  wrong["evidence"][0]["holds"] = true;
  CHECK_FALSE(verify::replay(wrong).reproduced);
  wrong = record;
  wrong["evidence"][0]["witness"] = {0, 1, 1};
  CHECK_FALSE(verify::replay(wrong).reproduced);

  json none{{"tag", "MAINE"}, {"evidence", json::array()}};
  CHECK_FALSE(verify::replay(none).reproduced);
  CHECK_FALSE(verify::replay_line("summary theorem=X").reproduced);
  CHECK_FALSE(verify::replay_line("violation {not json").reproduced);
}

TEST_CASE("replay of quotient, kernel-meet and retract claims") {
  auto     S  = fixtures::sl2();
  json     nu{{"classes", {{0}, {1}}}, {"class_order", {{0, 1}}}};
  json     q{{"kind", "quotient"},
             {"pomonoid", io::to_json(S)},
             {"congruence", nu},
             {"property", "cyclic-projective"},
             {"holds", false},
             {"witness", json::array()}};
  json     km{{"kind", "kernel-meet"},
               {"pomonoid", io::to_json(S)},
               {"idempotents", {0, 1}},
               {"property", "kernel-intersection"},
               {"holds", true},
               {"witness", {0}}};
  json     rt{{"kind", "retract"},
               {"property", "retract"},
               {"holds", true},
               {"source", io::to_json(io::load_sposet(fixtures::data("amalgam_sl2.json")))},
               {"target", io::to_json(io::load_sposet(fixtures::data("regular_sl2.json")))}};
  json rec{{"evidence", {q, km, rt}}};
  auto out = verify::replay(rec);
  CHECK_MESSAGE(out.reproduced, out.detail);
}
