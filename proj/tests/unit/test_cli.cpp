#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lorentz/cli.hpp"

namespace {
struct Run {
  int code;
  std::string out, err;
};
Run run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  const int c = lorentz::cli::run(args, o, e);
  return {c, o.str(), e.str()};
}
}  // namespace

TEST_CASE("zfun trivial point") {
  const Run r = run({"zfun", "--l", "1/2", "--m", "1/2", "--n", "1/2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "l,m,n,theta,tau,re,im,discrepancy,m_re,m_im\n1/2,1/2,1/2,0,0,1,0,0,1,0\n");
}

TEST_CASE("zfun JSON envelope") {
  const Run r = run({"zfun", "--l", "1", "--grid", "0:1:3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* k : {"command", "inputs", "results", "residuals", "version"}) CHECK(j.contains(k));
  CHECK(j["results"].size() == 27);
  CHECK(j["residuals"]["max_discrepancy"].get<double>() < 1e-12);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"zfun"}).code == 2);
  CHECK(run({"zfun", "--l", "3/4"}).code == 2);
  CHECK(run({"zfun", "--l", "1", "--m", "2"}).code == 2);
  CHECK(run({"zfun", "--l", "1", "--grid", "0:1"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"ops", "--set", "helicity", "--op", "X+"}).code == 2);
  CHECK(run({"radial", "--steps", "10"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("verify exit codes follow the suite outcome") {
  CHECK(run({"verify", "--suite", "clifford"}).code == 0);
  CHECK(run({"verify", "--suite", "schur"}).code == 0);
  const Run s = run({"verify", "--suite", "schur"});
  CHECK(nlohmann::json::parse(s.out)["results"].contains("realized_signs"));
}

TEST_CASE("tolerance flag overrides the environment") {
  setenv(lorentz::cli::kTolEnv, "0", 1);
  CHECK(run({"verify", "--suite", "grouplaw"}).code == 1);
  CHECK(run({"verify", "--suite", "grouplaw", "--tol", "1e-9"}).code == 0);
  unsetenv(lorentz::cli::kTolEnv);
  CHECK(run({"verify", "--suite", "grouplaw"}).code == 0);
}

TEST_CASE("gy-build writes six files and rejects an empty chain") {
  const auto dir = std::filesystem::temp_directory_path() / "lorentz_cli_unit_gy";
  std::filesystem::remove_all(dir);
  CHECK(run({"gy-build", "--out", dir.string()}).code == 0);
  int count = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) count += e.path().extension() == ".json";
  CHECK(count == 6);
  std::ifstream f(dir / "lambda3.json");
  const auto j = nlohmann::json::parse(f);
  CHECK(j["results"]["matrix"]["data"].size() == 4);
  const auto empty = dir / "empty.json";
  std::ofstream(empty) << R"({"reps":[],"coeffs":[]})";
  CHECK(run({"gy-build", "--chain", empty.string(), "--out", dir.string()}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("radial CSV has one row per grid point") {
  const Run r = run({"radial", "--r1", "10", "--steps", "500"});
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 502);
  CHECK(r.out.rfind("r,re_", 0) == 0);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"zfun", "--l", "3/2", "--grid", "0:3:7", "--tau", "0.4", "--format", "csv"},
           {"ops", "--set", "gn", "--l0", "1/2", "--p", "2"},
           {"verify", "--suite", "gy"},
           {"radial", "--r1", "8", "--steps", "300", "--format", "json"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
