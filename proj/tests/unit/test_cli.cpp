#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

std::string data(const std::string& name) { return std::string(AINF_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ainf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("reproduce the two examples") {
  Run a = run({"reproduce", "example-2.6", "--data-dir", AINF_DATA_DIR});
  CHECK(a.code == 0);
  CHECK(a.out.find("example-2.6 reproduced") != std::string::npos);
  Run b = run({"reproduce", "example-3.3", "--seeds", "20", "--data-dir", AINF_DATA_DIR});
  CHECK(b.code == 0);
  CHECK(b.out.find("FAIL") == std::string::npos);
}

TEST_CASE("machine output is versioned and deterministic") {
  Run a = run({"--json", "massey", data("example-3.3.dga"), "a01, a12, a23"});
  Run b = run({"massey", data("example-3.3.dga"), "a01, a12, a23", "--json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["format_version"] == 1);
  CHECK(j["massey"]["kind"] == "coset");
  CHECK(j["massey"]["directions"].size() == 4);
}

TEST_CASE("validate reports d^2 != 0 with exit status 1") {
  const std::string bad = temp_file("ainf-bad.dga", "dga { degree_cap: 6; generators { a:2 b:3 } d { a = b; b = a*a; } }\n");
  Run r = run({"validate", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("d^2") != std::string::npos);
  CHECK(run({"validate", data("example-2.6.dga")}).code == 0);
  std::remove(bad.c_str());
}

TEST_CASE("usage and input errors exit with status 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"cohomology", "/nonexistent/file.dga"}).code == 2);
  CHECK(run({"contract", data("example-3.3.dga"), "--table"}).code == 2);
  CHECK(run({"massey", data("example-3.3.dga"), "a01, a02, a12"}).code == 2);
  Run cap = run({"massey", data("example-2.6.dga"), "a01,a12,a23,a34", "--degree-cap", "10"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("minimal sufficient degree cap: 11") != std::string::npos);
}

TEST_CASE("identity checks along several contractions") {
  for (std::vector<std::string> extra : {std::vector<std::string>{}, {"--table"}, {"--random", "4"}}) {
    std::vector<std::string> args{"stasheff-check", data("example-2.6.dga"), "--arity", "4"};
    args.insert(args.end(), extra.begin(), extra.end());
    CHECK(run(args).code == 0);
    args[0] = "morphism-check";
    CHECK(run(args).code == 0);
  }
  CHECK(run({"bar-check", data("example-3.3.dga"), "--words", "3"}).code == 0);
  CHECK(run({"contract", data("example-2.6.dga"), "--table", "--homotopy", "opposite"}).code == 0);
}

TEST_CASE("adapted-check distinguishes the table contraction") {
  Run t = run({"adapted-check", data("example-2.6.dga"), "a01,a12,a23,a34", "--table"});
  CHECK(t.code == 1);
  CHECK(t.out.find("adapted contraction built") != std::string::npos);
}

TEST_CASE("input files are not modified") {
  const auto path = data("example-2.6.dga");
  const auto before = std::filesystem::last_write_time(path);
  run({"contract", path, "--table"});
  run({"reproduce", "example-2.6", "--data-dir", AINF_DATA_DIR});
  CHECK(std::filesystem::last_write_time(path) == before);
}
