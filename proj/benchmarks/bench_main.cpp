#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "random_instances.hpp"
#include "sonc/sonc.hpp"

using namespace sonc;

namespace {

ExponentialSum load(const std::string& name) {
  return load_instance(std::string(SONC_BENCH_DATA_DIR) + "/instances/" + name);
}

void BM_BoundMotzkin(benchmark::State& state) {
  const auto f = load("motzkin.json");
  for (auto _ : state) benchmark::DoNotOptimize(dual_sonc_bound(f));
}
BENCHMARK(BM_BoundMotzkin);

void BM_BoundKirkman(benchmark::State& state) {
  const auto f = load("table6_kirkman.json");
  for (auto _ : state) benchmark::DoNotOptimize(dual_sonc_bound(f));
}
BENCHMARK(BM_BoundKirkman);

void BM_RelaxedTable5(benchmark::State& state) {
  const auto f = load("table5_c3.json");
  for (auto _ : state) benchmark::DoNotOptimize(relaxed_bound(f, 1.0));
}
BENCHMARK(BM_RelaxedTable5);

void BM_MembershipRandom(benchmark::State& state) {
  testing::InstanceGenerator gen(1);
  std::vector<std::pair<DualVector, SignDecomposition>> inputs;
  for (int i = 0; i < 64; ++i) {
    const auto f = gen.next();
    inputs.emplace_back(DualVector::from_sum(f), sign_split(f));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [w, dec] = inputs[k++ % inputs.size()];
    benchmark::DoNotOptimize(check_membership_tau(w, dec));
  }
}
BENCHMARK(BM_MembershipRandom);

// Dense random LP: max c^T x, A x <= b, 0 <= x, with A, b, c > 0 so it is
// always feasible and bounded.
void BM_Simplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  lp::LinearProgram prog(n, lp::Sense::Maximize);
  std::vector<double> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = u(rng);
    prog.set_bound(j, lp::Bound::NonNegative);
  }
  prog.set_objective(c);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n);
    for (auto& a : row) a = u(rng);
    prog.add_constraint(std::move(row), lp::Relation::LessEqual, u(rng) * 10.0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve(prog));
}
BENCHMARK(BM_Simplex)->Arg(10)->Arg(40)->Arg(100);

void BM_OracleTable1(benchmark::State& state) {
  const auto f = load("table1.json");
  OracleConfig cfg;
  cfg.grid_points_per_axis = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_min(f, cfg));
}
BENCHMARK(BM_OracleTable1)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
