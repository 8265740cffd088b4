#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "gqaoa/cli.hpp"
#include "gqaoa/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = gqaoa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "gqaoa_cli_test") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("expectation with an idle driver prints the mean") {
  const auto r = cli({"expectation", "--ensemble", "gaussian", "--gammas", "0.5", "--betas", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("usage errors exit with 2 and write nothing") {
  TempDir tmp;
  const auto out = tmp / "a.json";
  CHECK(cli({"angles", "--ensemble", "gaussian", "--depth", "1", "--bogus", "--out", out}).code == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(cli({}).code == 2);
  CHECK(cli({"expectation", "--ensemble", "gaussian", "--gammas", "x", "--betas", "0"}).code == 2);
  CHECK(cli({"expectation", "--ensemble", "cauchy", "--gammas", "1", "--betas", "0"}).code == 2);
  CHECK(cli({"expectation", "--ensemble", "gaussian", "--spectrum", "f", "--gammas", "1",
             "--betas", "0"}).code == 2);
}

TEST_CASE("domain and resource errors") {
  const auto mismatch = cli({"expectation", "--ensemble", "gaussian", "--gammas", "1,2", "--betas", "0"});
  CHECK(mismatch.code == 3);
  CHECK(mismatch.err.find("gammas") != std::string::npos);
  TempDir tmp;
  CHECK(cli({"spectrum", "--problem", "npp", "--n", "27", "--out", tmp / "s.txt"}).code == 4);
  CHECK(cli({"spectrum", "--problem", "npp", "--n", "0", "--out", tmp / "s.txt"}).code == 3);
  CHECK(cli({"simulate", "--spectrum", tmp / "missing.txt", "--gammas", "1", "--betas", "1"}).code == 3);
}

TEST_CASE("angles writes a result JSON with the invocation") {
  TempDir tmp;
  const auto out = tmp / "angles.json";
  const auto r = cli({"angles", "--ensemble", "chisq1", "--depth", "1", "--starts", "64", "--seed",
                      "1", "--out", out});
  REQUIRE(r.code == 0);
  const json doc = json::parse(slurp(out));
  CHECK(std::abs(doc["value"].get<double>() - 0.557) < 2e-3);
  CHECK(doc["seed"] == 1);
  CHECK(doc["invocation"]["argv"].get<std::string>().find("--seed 1") != std::string::npos);
}

TEST_CASE("spectrum -> simulate round trip matches expectation") {
  TempDir tmp;
  const auto spec = tmp / "npp.txt";
  REQUIRE(cli({"spectrum", "--problem", "npp", "--n", "8", "--seed", "3", "--out", spec}).code == 0);
  CHECK(fs::exists(spec + ".instance.json"));
  const json inst = json::parse(slurp(spec + ".instance.json"));
  CHECK(inst["kind"] == "npp");
  CHECK(inst["values"].size() == 8);
  CHECK(slurp(spec).find("# invocation:") == 0);

  const auto sim = cli({"simulate", "--spectrum", spec, "--gammas", "0.241", "--betas", "5.162"});
  const auto ens = cli({"expectation", "--spectrum", spec, "--gammas", "0.241", "--betas", "5.162"});
  REQUIRE(sim.code == 0);
  REQUIRE(ens.code == 0);
  CHECK(std::abs(std::stod(sim.out) - std::stod(ens.out)) < 1e-9);

  const auto json_spec = tmp / "rcm.json";
  REQUIRE(cli({"spectrum", "--problem", "rcm", "--n", "4", "--seed", "2", "--out", json_spec}).code == 0);
  CHECK(gqaoa::io::read_spectrum(json_spec).n() == 4);
}

TEST_CASE("simulate with shots") {
  TempDir tmp;
  const auto spec = tmp / "s.txt";
  REQUIRE(cli({"spectrum", "--problem", "rcm", "--n", "3", "--seed", "1", "--out", spec}).code == 0);
  const auto r = cli({"simulate", "--spectrum", spec, "--gammas", "0.7", "--betas", "3.0",
                      "--shots", "20", "--seed", "5"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  std::istringstream tokens(second);
  int count = 0;
  for (std::string t; tokens >> t;) ++count;
  CHECK(count == 20);

  const auto out = tmp / "sim.json";
  REQUIRE(cli({"simulate", "--spectrum", spec, "--gammas", "0.7", "--betas", "3.0", "--shots",
               "5", "--seed", "5", "--out", out}).code == 0);
  const json doc = json::parse(slurp(out));
  CHECK(doc["samples"].size() == 5);
  CHECK(doc["invocation"]["seed"] == 5);
}

TEST_CASE("landscape and converge write CSV") {
  TempDir tmp;
  const auto land = tmp / "land.csv";
  REQUIRE(cli({"landscape", "--ensemble", "chisq1", "--gamma-steps", "5", "--beta-steps", "4",
               "--out", land}).code == 0);
  const std::string csv = slurp(land);
  CHECK(csv.find("# invocation:") == 0);
  CHECK(csv.find("gamma\\beta,") != std::string::npos);

  const auto conv = tmp / "conv.csv";
  REQUIRE(cli({"converge", "--problem", "npp", "--depth", "1", "--sizes", "4,5", "--instances",
               "2", "--starts", "2", "--seed", "3", "--out", conv}).code == 0);
  const std::string ccsv = slurp(conv);
  CHECK(ccsv.find("# seed: 3") != std::string::npos);
  CHECK(ccsv.find("n,instances,mean_gamma,se_gamma,mean_beta,se_beta,mean_value") != std::string::npos);

  CHECK(cli({"converge", "--problem", "npp", "--depth", "1", "--sizes", "24", "--out",
             tmp / "big.csv"}).code == 4);
}

TEST_CASE("threads flag does not change results") {
  const auto a = cli({"angles", "--ensemble", "gaussian", "--depth", "2", "--starts", "6", "--seed", "4"});
  const auto b = cli({"--threads", "3", "angles", "--ensemble", "gaussian", "--depth", "2",
                      "--starts", "6", "--seed", "4"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const json ja = json::parse(a.out), jb = json::parse(b.out);
  CHECK(ja["value"] == jb["value"]);
  CHECK(ja["gammas"] == jb["gammas"]);
}
