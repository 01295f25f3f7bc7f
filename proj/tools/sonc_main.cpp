#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "report.hpp"
#include "sonc/circuit.hpp"
#include "sonc/dual_cone.hpp"

using namespace sonc;
using namespace sonc::cli;

namespace {

std::string weights_text(const std::vector<double>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += fmt::format("{:.10g}", w[i]);
  }
  return s + ")";
}

int cmd_bound(const std::string& file, std::optional<double> relax, bool json, bool oracle) {
  const auto f = load_instance(file);
  BoundOptions opts;
  opts.relax_epsilon = relax;
  opts.with_oracle = oracle;
  const auto report = run_bound(f, instance_id(file), opts);
  if (json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << to_text(report);
  }
  return report.certified() ? kSuccess : kUncertified;
}

int cmd_check_dual(const std::string& file) {
  const auto f = load_instance(file);
  const auto dec = sign_split(f);
  const auto w = DualVector::from_sum(f);
  const auto tau = check_membership_tau(w, dec);
  const auto lambda = check_membership_lambda(w, dec);
  fmt::print("tau representation     {}\n", tau.member ? "member" : "not_member");
  if (!tau.member && !tau.reason.empty()) fmt::print("  reason  {}\n", tau.reason);
  fmt::print("lambda representation  {}\n", lambda.member ? "member" : "not_member");
  if (!lambda.member && !lambda.reason.empty()) fmt::print("  reason  {}\n", lambda.reason);
  if (tau.member != lambda.member) {
    fmt::print(stderr, "warning: the two representations disagree\n");
  }
  if (tau.certificate) {
    for (const auto& [beta, t] : tau.certificate->taus) {
      fmt::print("tau{}  {}\n", beta.to_string(), weights_text(t));
    }
  }
  return tau.member ? kSuccess : kUncertified;
}

int cmd_check_circuit(const std::string& file) {
  const auto f = load_instance(file);
  const auto ci = CircuitInstance::from_sum(f);
  const auto verdict = circuit_nonnegative(ci);
  fmt::print("c_beta   {:.10g}\n", ci.inner_coefficient);
  fmt::print("theta    {:.10g}\n", verdict.number.theta);
  fmt::print("lambda   {}\n", weights_text(verdict.number.lambda_used.weights));
  fmt::print("verdict  {}\n", verdict.nonnegative ? "nonnegative" : "not certified");
  return verdict.nonnegative ? kSuccess : kUncertified;
}

int cmd_bench(const std::string& dir, bool json) {
  const auto rows = run_bench(dir);
  if (json) {
    std::cout << to_json(rows).dump(2) << '\n';
  } else {
    std::cout << to_text(rows);
  }
  return kSuccess;
}

int cmd_oracle(const std::string& file, std::size_t grid, double range, bool json) {
  const auto f = load_instance(file);
  OracleConfig cfg;
  cfg.grid_points_per_axis = grid;
  cfg.box_radius = range;
  const auto r = sample_min(f, cfg);
  if (json) {
    nlohmann::json j = {{"instance", instance_id(file)},
                        {"value", r.value},
                        {"grid_value", r.grid_value},
                        {"argmin", r.argmin}};
    std::cout << j.dump(2) << '\n';
  } else {
    fmt::print("sample_min  {:.10g}\n", r.value);
    fmt::print("grid_min    {:.10g}\n", r.grid_value);
    fmt::print("argmin      {}\n", weights_text(r.argmin));
  }
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds for sparse polynomials and exponential sums via the dual SONC cone"};
  app.require_subcommand(1);

  std::string file;
  std::string dir;
  bool json = false;
  bool oracle = false;
  std::optional<double> relax;
  std::size_t grid = OracleConfig{}.grid_points_per_axis;
  double range = OracleConfig{}.box_radius;

  auto* bound = app.add_subcommand("bound", "Compute the dual SONC lower bound");
  bound->add_option("file", file, "Instance file")->required();
  bound->add_option("--relax", relax, "Solve the relaxed program with penalty epsilon")
      ->check(CLI::PositiveNumber);
  bound->add_flag("--json", json, "Print JSON");
  bound->add_flag("--oracle", oracle, "Append a sampled minimum");

  auto* dual = app.add_subcommand("check-dual", "Test dual SONC cone membership of the coefficients");
  dual->add_option("file", file, "Instance file")->required();

  auto* circuit = app.add_subcommand("check-circuit", "Circuit number test for a circuit function");
  circuit->add_option("file", file, "Instance file")->required();

  auto* bench = app.add_subcommand("bench", "Solve every instance in a directory");
  bench->add_option("dir", dir, "Instance directory")->required();
  bench->add_flag("--json", json, "Print JSON");

  auto* orc = app.add_subcommand("oracle", "Grid search for the minimum");
  orc->add_option("file", file, "Instance file")->required();
  orc->add_option("--grid", grid, "Grid points per axis")->check(CLI::Range(3, 100000));
  orc->add_option("--range", range, "Half-width of the search box")->check(CLI::PositiveNumber);
  orc->add_flag("--json", json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*bound) return cmd_bound(file, relax, json, oracle);
    if (*dual) return cmd_check_dual(file);
    if (*circuit) return cmd_check_circuit(file);
    if (*bench) return cmd_bench(dir, json);
    if (*orc) return cmd_oracle(file, grid, range, json);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kInputError;
  }
  return kInputError;
}
