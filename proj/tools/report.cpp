#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>

#include <fmt/format.h>

namespace sonc::cli {

using nlohmann::json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json exponent_json(const Exponent& e) {
  return std::vector<double>(e.coords().begin(), e.coords().end());
}

std::string vec_text(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt::format("{:.10g}", v[i]);
  }
  return s + ")";
}

std::map<std::string, Reference> load_references(const std::filesystem::path& file) {
  std::map<std::string, Reference> out;
  std::ifstream in(file);
  if (!in) return out;
  const json j = json::parse(in);
  for (const auto& [key, value] : j.items()) {
    Reference ref;
    if (value.is_number()) {
      ref.opt = value.get<double>();
    } else if (value.is_string() && value.get<std::string>() == "infeasible") {
      ref.infeasible = true;
    } else {
      continue;
    }
    out.emplace(key, ref);
  }
  return out;
}

}  // namespace

bool Report::certified() const {
  if (result.status != BoundStatus::Bounded) return false;
  return !relax || relax->tol == 0.0;
}

std::string instance_id(const std::filesystem::path& path) { return path.stem().string(); }

Report run_bound(const ExponentialSum& f, std::string instance, const BoundOptions& opts) {
  Report r;
  r.instance = std::move(instance);
  const auto start = std::chrono::steady_clock::now();
  if (opts.relax_epsilon) {
    auto relaxed = relaxed_bound(f, *opts.relax_epsilon);
    r.result = std::move(relaxed.bound);
    r.relax = RelaxInfo{relaxed.epsilon, relaxed.tol};
  } else {
    r.result = dual_sonc_bound(f);
  }
  const auto stop = std::chrono::steady_clock::now();
  r.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  if (opts.with_oracle) r.oracle = sample_min(f, opts.oracle_config);
  return r;
}

json to_json(const Report& r) {
  json j;
  j["instance"] = r.instance;
  j["status"] = std::string(to_string(r.result.status));
  j["certified"] = r.certified();
  j["opt"] = number_or_null(r.result.gamma_star);
  j["lower_bound"] = number_or_null(r.result.lower_bound);
  j["c_star"] = number_or_null(r.result.c_star);
  j["branch"] = r.result.status == BoundStatus::Bounded
                    ? json(std::string(to_string(r.result.branch)))
                    : json(nullptr);
  j["v0"] = r.result.v0;
  j["degenerate"] = r.result.degenerate;
  j["wall_time_ms"] = r.wall_time_ms;
  json cert = json::array();
  for (const auto& [beta, tau] : r.result.certificate.taus) {
    cert.push_back({{"beta", exponent_json(beta)}, {"tau", tau}});
  }
  j["certificate"] = std::move(cert);
  if (!r.result.diagnostic.empty()) j["diagnostic"] = r.result.diagnostic;
  if (r.relax) j["relax"] = {{"epsilon", r.relax->epsilon}, {"tol", r.relax->tol}};
  if (r.oracle) {
    j["oracle"] = {{"value", r.oracle->value}, {"argmin", r.oracle->argmin}};
  }
  return j;
}

std::string to_text(const Report& r) {
  std::string s;
  s += fmt::format("instance     {}\n", r.instance);
  s += fmt::format("status       {}\n", to_string(r.result.status));
  if (r.result.status == BoundStatus::Bounded) {
    s += fmt::format("branch       {}\n", to_string(r.result.branch));
    s += fmt::format("opt          {:.10g}\n", r.result.gamma_star);
    s += fmt::format("lower_bound  {:.10g}\n", r.result.lower_bound);
    s += fmt::format("c_star       {:.10g}\n", r.result.c_star);
  }
  if (r.relax) {
    s += fmt::format("epsilon      {:.10g}\n", r.relax->epsilon);
    s += fmt::format("tol          {:.10g}{}\n", r.relax->tol,
                     r.relax->tol > 0.0 ? "  (uncertified)" : "");
  }
  s += fmt::format("time_ms      {:.3f}\n", r.wall_time_ms);
  for (const auto& [beta, tau] : r.result.certificate.taus) {
    s += fmt::format("tau{}  {}\n", beta.to_string(), vec_text(tau));
  }
  if (r.result.degenerate) s += "note         constant driven to 0; bound is v0\n";
  if (!r.result.diagnostic.empty()) s += fmt::format("diagnostic   {}\n", r.result.diagnostic);
  if (r.oracle) {
    s += fmt::format("sample_min   {:.10g} at {}\n", r.oracle->value, vec_text(r.oracle->argmin));
  }
  return s;
}

std::optional<double> BenchRow::deviation() const {
  if (!report || !reference || !reference->opt) return std::nullopt;
  if (report->result.status != BoundStatus::Bounded) return std::nullopt;
  return report->result.gamma_star - *reference->opt;
}

std::vector<BenchRow> run_bench(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw InstanceError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    if (entry.path().filename() == "references.json") continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const auto refs = load_references(dir / "references.json");

  std::vector<std::future<BenchRow>> jobs;
  for (const auto& file : files) {
    jobs.push_back(std::async(std::launch::async, [file, &refs] {
      BenchRow row;
      row.instance = instance_id(file);
      if (auto it = refs.find(row.instance); it != refs.end()) row.reference = it->second;
      try {
        row.report = run_bound(load_instance(file.string()), row.instance, {});
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      return row;
    }));
  }
  std::vector<BenchRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

json to_json(const std::vector<BenchRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json j;
    if (row.report) {
      j = to_json(*row.report);
    } else {
      j["instance"] = row.instance;
      j["status"] = "error";
      j["error"] = row.error;
    }
    if (row.reference) {
      j["reference"] = row.reference->infeasible ? json("infeasible")
                                                 : number_or_null(*row.reference->opt);
    }
    if (auto d = row.deviation()) j["deviation"] = *d;
    out.push_back(std::move(j));
  }
  return out;
}

std::string to_text(const std::vector<BenchRow>& rows) {
  std::string s = fmt::format("{:<18} {:<11} {:>14} {:>14} {:>10} {:>12} {:>12}\n", "instance",
                              "status", "opt", "lower_bound", "time_ms", "reference",
                              "deviation");
  for (const auto& row : rows) {
    std::string ref = "-";
    if (row.reference) {
      ref = row.reference->infeasible ? "infeasible" : fmt::format("{:.6g}", *row.reference->opt);
    }
    if (!row.report) {
      s += fmt::format("{:<18} {:<11} {}\n", row.instance, "error", row.error);
      continue;
    }
    const auto& r = row.report->result;
    const bool bounded = r.status == BoundStatus::Bounded;
    const auto dev = row.deviation();
    s += fmt::format("{:<18} {:<11} {:>14} {:>14} {:>10.3f} {:>12} {:>12}\n", row.instance,
                     to_string(r.status), bounded ? fmt::format("{:.6f}", r.gamma_star) : "inf",
                     bounded ? fmt::format("{:.6f}", r.lower_bound) : "-",
                     row.report->wall_time_ms, ref, dev ? fmt::format("{:+.2e}", *dev) : "-");
  }
  return s;
}

}  // namespace sonc::cli
