#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "paths.hpp"
#include "report.hpp"

using namespace sonc;
using namespace sonc::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("sonc_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("json report round trips numbers exactly") {
  const auto f = testing::load("instances/table1.json");
  const auto report = run_bound(f, "table1", {});
  const auto text = to_json(report).dump();
  const auto j = nlohmann::json::parse(text);
  CHECK(j["instance"] == "table1");
  CHECK(j["status"] == "bounded");
  CHECK(j["opt"].get<double>() == report.result.gamma_star);
  CHECK(j["lower_bound"].get<double>() == report.result.lower_bound);
  CHECK(j["c_star"].get<double>() == report.result.c_star);
  const auto& cert = j["certificate"];
  REQUIRE(cert.size() == report.result.certificate.taus.size());
  for (const auto& entry : cert) {
    const Exponent beta(entry["beta"].get<std::vector<double>>());
    CHECK(entry["tau"].get<std::vector<double>>() == report.result.certificate.taus.at(beta));
  }
}

TEST_CASE("infeasible and relaxed reports") {
  const auto f = testing::load("instances/table5_c3.json");
  const auto strict = run_bound(f, "t", {});
  CHECK_FALSE(strict.certified());
  const auto j = to_json(strict);
  CHECK(j["opt"].is_null());
  CHECK(j["status"] == "infeasible");
  CHECK(to_text(strict).find("infeasible") != std::string::npos);

  BoundOptions opts;
  opts.relax_epsilon = 1.0;
  const auto relaxed = run_bound(f, "t", opts);
  CHECK_FALSE(relaxed.certified());
  CHECK(to_json(relaxed)["relax"]["tol"].get<double>() > 0.0);
}

TEST_CASE("oracle is appended on request") {
  BoundOptions opts;
  opts.with_oracle = true;
  opts.oracle_config.grid_points_per_axis = 21;
  const auto r = run_bound(testing::load("instances/motzkin.json"), "m", opts);
  REQUIRE(r.oracle);
  CHECK(to_json(r).contains("oracle"));
}

TEST_CASE("bench over the bundled instances") {
  const auto rows = run_bench(testing::instance_path("instances"));
  REQUIRE(rows.size() == 7);
  CHECK(rows.front().instance == "example39");
  CHECK(rows[1].instance == "motzkin");
  REQUIRE(rows[1].deviation());
  CHECK(std::abs(*rows[1].deviation()) < 1e-9);
  for (const auto& row : rows) CHECK(row.report.has_value());
  CHECK(to_json(rows).size() == 7);
}

TEST_CASE("bench on an empty directory") {
  TempDir dir("empty");
  const auto rows = run_bench(dir.path);
  CHECK(rows.empty());
  CHECK(to_json(rows).empty());
}

TEST_CASE("bench keeps going past a malformed file") {
  TempDir dir("malformed");
  fs::copy_file(testing::instance_path("instances/motzkin.json"), dir.path / "a.json");
  std::ofstream(dir.path / "b.json") << "{ not json";
  const auto rows = run_bench(dir.path);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].report.has_value());
  CHECK_FALSE(rows[1].report.has_value());
  CHECK_FALSE(rows[1].error.empty());
  CHECK(to_text(rows).find("error") != std::string::npos);
}

TEST_CASE("bench on a missing directory") {
  CHECK_THROWS_AS(run_bench("/nonexistent/sonc"), InstanceError);
}
