#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "fixtures.hpp"
#include "spos/cli.hpp"
#include "spos/io.hpp"

using fixtures::data;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = spos::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path scratch(char const* name) {
    auto p = std::filesystem::temp_directory_path() / "spos-cli-test";
    std::filesystem::create_directories(p);
    return p / name;
  }
}  // namespace

TEST_CASE("validate") {
  auto r = run({"validate", data("sl2.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("kind=pomonoid size=2") != std::string::npos);

  auto bad = scratch("bad.json");
  spos::io::write_text(bad, R"({"kind":"pomonoid","size":2,"mul":[[0,1],[1,0]],"order":[[1,0]]})");
  r = run({"validate", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("invalid") != std::string::npos);

  auto broken = scratch("broken.json");
  spos::io::write_text(broken, "{\"kind\": \"pomonoid\",\n \"size\": }");
  r = run({"validate", broken.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(":2:") != std::string::npos);
}

TEST_CASE("check") {
  auto r = run({"check", data("amalgam_sl2.json").string(), "--property", "generator"});
  CHECK(r.code == 0);
  CHECK(r.out.find("holds=true") != std::string::npos);
  CHECK(r.out.find("maps=") != std::string::npos);

  r = run({"check", data("nu1e_quotient.json").string(), "--property", "condition-e"});
  CHECK(r.code == 1);
  CHECK(r.out.find("witness=[0,0,1]") != std::string::npos);

  CHECK(run({"check", data("sl2.json").string(), "--property", "regular"}).code == 0);
  CHECK(run({"check", data("sl2.json").string(), "--property", "nope"}).code == 2);
  CHECK(run({"check", data("sl2.json").string()}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--theorem", "CYCPROJ", "--bogus"}).code == 2);
  CHECK(run({"verify", "--theorem", "CYCPROJ", "--max-order", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("construct and tensor") {
  auto left = scratch("left.json");
  auto r    = run({"construct", "power", data("sl2.json").string(), "1", "--out", left.string()});
  REQUIRE(r.code == 0);
  // Turn S_S into the left regular S-poset (SL2 is commutative).
  auto j    = spos::io::read_json(left);
  j["side"] = "left";
  spos::io::write_text(left, spos::io::format(j));

  r = run({"tensor", data("amalgam_sl2.json").string(), left.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("classes=3") != std::string::npos);

  r = run({"tensor", data("amalgam_sl2.json").string(), left.string(), "2", "0", "0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("holds=true") != std::string::npos);
  CHECK(r.out.find("scheme ") != std::string::npos);

  r = run({"tensor", data("amalgam_sl2.json").string(), left.string(), "0", "0", "1", "0"});
  CHECK(r.code == 1);

  auto amalgam = scratch("amalgam.json");
  r = run({"construct", "amalgam", data("sl2.json").string(), "1", "--out", amalgam.string()});
  CHECK(r.code == 0);
  CHECK(spos::io::load_sposet(amalgam) == spos::io::load_sposet(data("amalgam_sl2.json")));

  r = run({"construct", "diag", data("sl2.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"size\": 4") != std::string::npos);

  r = run({"construct", "product", data("amalgam_sl2.json").string(), data("regular_sl2.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"size\": 6") != std::string::npos);

  CHECK(run({"construct", "amalgam", data("sl2.json").string(), "0", "1"}).code == 2);
  CHECK(run({"construct", "pushout", data("sl2.json").string()}).code == 2);
}

TEST_CASE("quotient") {
  auto r = run({"quotient", data("regular_sl2.json").string(), "0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"(congruence {"class_order":[[0,1]],"classes":[[0],[1]]})") != std::string::npos);
  auto cfile = scratch("cong.json");
  spos::io::write_text(cfile, R"({"classes":[[0,1]]})");
  r = run({"quotient", data("regular_sl2.json").string(), cfile.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"size\": 1") != std::string::npos);
  CHECK(run({"quotient", data("regular_sl2.json").string(), "0"}).code == 2);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--order", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "enumerate order=2 monoids=2 pomonoids=4\n");
  auto dir = scratch("catalog");
  std::filesystem::remove_all(dir);
  r = run({"enumerate", "--max-order", "2", "--workers", "2", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir / "pomonoid-index.json"));
  r = run({"enumerate", data("sl2.json").string(), "--order", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count=") != std::string::npos);
  CHECK(run({"enumerate", "--order", "9"}).code == 2);
}

TEST_CASE("verify writes a deterministic report") {
  auto a = scratch("report-a.txt");
  auto b = scratch("report-b.txt");
  auto r = run({"verify", "--theorem", "CYCPROJ", "--theorem", "MAINE", "--max-order", "2",
                "--max-poset", "2", "--out", a.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("wall") != std::string::npos);
  r = run({"verify", "--theorem", "CYCPROJ", "--theorem", "MAINE", "--max-order", "2",
           "--max-poset", "2", "--workers", "2", "--report", b.string()});
  CHECK(r.code == 0);
  std::ifstream fa(a), fb(b);
  std::string   ta((std::istreambuf_iterator<char>(fa)), {});
  std::string   tb((std::istreambuf_iterator<char>(fb)), {});
  CHECK(!ta.empty());
  CHECK(ta == tb);
  CHECK(ta.find("wall") == std::string::npos);
  CHECK(run({"verify", "--theorem", "NOPE"}).code == 2);
}
