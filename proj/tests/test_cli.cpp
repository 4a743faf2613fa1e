#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chhs/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using chhs::run;
using Json = nlohmann::json;

namespace {

const char* kTwoEdges = R"({"vertices": ["a", "b", "c", "d"], "edges": [["a", "b"], ["c", "d"]]})";

std::string octahedron() {
  const auto r = run({"gen", "octahedron", "--size", "3", "--w-rule", "complete"});
  REQUIRE(r.exit_code == 0);
  return r.out;
}

}  // namespace

TEST_CASE("verify-chhs exit codes") {
  const auto pass = run({"verify-chhs"}, octahedron());
  CHECK(pass.exit_code == 0);
  const Json doc = Json::parse(pass.out);
  CHECK(doc["header"]["command"] == "verify-chhs");
  CHECK(doc["result"]["verdict"] == "PASS");
  CHECK(doc["result"]["delta_star"] == "1/1");
  CHECK(doc["result"]["complexity"] == 4);

  const auto fail = run({"verify-chhs"}, kTwoEdges);
  CHECK(fail.exit_code == 1);
  const Json f = Json::parse(fail.out);
  CHECK(f["result"]["verdict"] == "FAIL");
  CHECK(f["result"]["condition2"]["witness"]["pair"] == Json::array({"a", "c"}));
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"verify-chhs", "--bogus"}, kTwoEdges).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"verify-chhs"}, "{").exit_code == 2);
  CHECK(run({"inspect", "--format", "xml"}, kTwoEdges).exit_code == 2);
  CHECK(run({"distance-formula", "--thresholds", "2,x"}, kTwoEdges).exit_code == 2);
  CHECK(run({"verify-chhs", "--input", "/nonexistent/file.json"}).exit_code == 2);
  CHECK(run({"check-action"}, kTwoEdges).exit_code == 2);
  const auto r = run({"gen", "cycle", "--size", "2"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("BadParameters") != std::string::npos);
}

TEST_CASE("every command runs on the octahedron") {
  const std::string doc = octahedron();
  for (const char* cmd : {"inspect", "projections", "constants", "distance-formula", "realize", "build-w"}) {
    CAPTURE(cmd);
    const auto r = run({cmd}, doc);
    CHECK(r.exit_code == 0);
    CHECK_NOTHROW((void)Json::parse(r.out));
  }
  const auto thm = run({"verify-thm-a"}, doc);
  CHECK(thm.exit_code == 1);
  CHECK(Json::parse(thm.out)["result"]["condition_b"]["holds"] == true);
}

TEST_CASE("text format flattens the report") {
  const auto r = run({"inspect", "--format", "text"}, kTwoEdges);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("header.command: inspect\n") != std::string::npos);
}

TEST_CASE("output file and input file") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in = (dir / "chhs_cli_in.json").string();
  const auto out = (dir / "chhs_cli_out.json").string();
  {
    std::ofstream f(in);
    f << kTwoEdges;
  }
  const auto r = run({"inspect", "--input", in, "--output", out});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run({"inspect"}, kTwoEdges).out);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST_CASE("reports are deterministic") {
  const std::string doc = run({"gen", "random_flag", "--size", "14", "--prob", "0.35", "--seed", "9",
                               "--w-rule", "shared_codim1_face"})
                              .out;
  for (const char* cmd : {"verify-chhs", "constants", "distance-formula", "realize"}) {
    CAPTURE(cmd);
    CHECK(run({cmd, "--seed", "3"}, doc).out == run({cmd, "--seed", "3"}, doc).out);
    CHECK(run({cmd, "--threads", "1"}, doc).out == run({cmd, "--threads", "4"}, doc).out);
  }
}

TEST_CASE("gen emits parseable documents for every kind") {
  for (const char* kind : {"path", "cycle", "octahedron", "random_flag", "join", "amalgam", "blowup"}) {
    CAPTURE(kind);
    const auto r = run({"gen", kind, "--size", "3", "--radius", "1"});
    CHECK(r.exit_code == 0);
    CHECK(run({"inspect"}, r.out).exit_code == 0);
  }
}
