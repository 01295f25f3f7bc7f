#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sonc/bound.hpp"
#include "sonc/oracle.hpp"
#include "sonc/support.hpp"

namespace sonc::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kUncertified = 2 };

struct RelaxInfo {
  double epsilon = 0.0;
  double tol = 0.0;
};

/// One solved instance, as printed by `bound` and `bench`.
struct Report {
  std::string instance;
  BoundResult result;
  double wall_time_ms = 0.0;
  std::optional<RelaxInfo> relax;
  std::optional<OracleResult> oracle;

  bool certified() const;
};

struct BoundOptions {
  std::optional<double> relax_epsilon;
  bool with_oracle = false;
  OracleConfig oracle_config;
};

/// Instance id is the file stem.
std::string instance_id(const std::filesystem::path& path);

Report run_bound(const ExponentialSum& f, std::string instance, const BoundOptions& opts);

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

/// Reference values keyed by instance id: a number is the expected opt,
/// the string "infeasible" an expected infeasible status.
struct Reference {
  std::optional<double> opt;
  bool infeasible = false;
};

struct BenchRow {
  std::string instance;
  std::optional<Report> report;
  std::string error;
  std::optional<Reference> reference;

  /// opt - reference, when both are numbers.
  std::optional<double> deviation() const;
};

/// Solves every *.json instance in `dir` except references.json, in filename
/// order. Per-file failures become error rows.
std::vector<BenchRow> run_bench(const std::filesystem::path& dir);

nlohmann::json to_json(const std::vector<BenchRow>& rows);
std::string to_text(const std::vector<BenchRow>& rows);

}  // namespace sonc::cli
