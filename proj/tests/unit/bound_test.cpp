#include <doctest.h>

#include <cmath>

#include "../common/random_instances.hpp"
#include "paths.hpp"
#include "sonc/bound.hpp"
#include "sonc/oracle.hpp"

using namespace sonc;

namespace {

BoundResult solve(const std::string& name) { return dual_sonc_bound(testing::load(name)); }

}  // namespace

TEST_CASE("motzkin") {
  const auto r = solve("instances/motzkin.json");
  REQUIRE(r.status == BoundStatus::Bounded);
  CHECK(r.branch == Branch::ZeroInAplus);
  CHECK(r.gamma_star == doctest::Approx(26.0).epsilon(1e-10));
  CHECK(r.c_star == doctest::Approx(3.0 * std::log(3.0)).epsilon(1e-10));
  CHECK(r.lower_bound == doctest::Approx(-26.0).epsilon(1e-10));
  REQUIRE(r.certificate.taus.size() == 1);
}

TEST_CASE("frozen reference values") {
  // Cross-checked against an independent LP solver.
  CHECK(solve("instances/table1.json").gamma_star ==
        doctest::Approx(4.5113519212621505).epsilon(1e-9));
  CHECK(solve("instances/table2.json").gamma_star ==
        doctest::Approx(3.0 + 1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-9));
  const auto t5 = solve("instances/table5_c1.json");
  CHECK(t5.gamma_star == doctest::Approx(-0.810792884997279).epsilon(1e-9));
  CHECK(t5.c_star == doctest::Approx(std::log(2.0) / 4.0).epsilon(1e-9));
  const auto k = solve("instances/table6_kirkman.json");
  CHECK(k.gamma_star == doctest::Approx(2.597827344545483).epsilon(1e-9));
  CHECK(k.c_star == doctest::Approx(0.954675458975175).epsilon(1e-9));
}

TEST_CASE("table 2 program rows") {
  const auto f = testing::load("instances/table2.json");
  const auto bp = build_lp_relax1(f, sign_split(f));
  CHECK(bp.betas.size() == 1);
  CHECK(bp.program.num_variables() == 3);
  CHECK(bp.program.num_constraints() == 4);
  CHECK_FALSE(build_lp_relax2(f, sign_split(f)));
}

TEST_CASE("infeasible instance") {
  const auto r = solve("instances/table5_c3.json");
  CHECK(r.status == BoundStatus::Infeasible);
  CHECK(std::isinf(r.gamma_star));
  CHECK(r.diagnostic.find("infeasible") != std::string::npos);
}

TEST_CASE("all positive terms give the constant as bound") {
  const auto r = solve("extra/allpos.json");
  REQUIRE(r.status == BoundStatus::Bounded);
  CHECK(std::isinf(r.c_star));
  CHECK(r.lower_bound == 1.0);
  CHECK_FALSE(r.degenerate);
}

TEST_CASE("negative constant uses the second branch") {
  const auto f = testing::load("extra/expo_negative_constant.json");
  REQUIRE(build_lp_relax2(f, sign_split(f)));
  const auto r = dual_sonc_bound(f);
  REQUIRE(r.status == BoundStatus::Bounded);
  CHECK(r.branch == Branch::ZeroInAminus);
  CHECK(r.gamma_star == doctest::Approx(4.0));
  CHECK(r.lower_bound == doctest::Approx(-4.0));
}

TEST_CASE("negative non-origin vertex is rejected") {
  ExponentialSum f(1, InstanceKind::Polynomial);
  f.add_term({0}, 1.0);
  f.add_term({1}, 1.0);
  f.add_term({3}, -1.0);
  CHECK_THROWS_AS(dual_sonc_bound(f), VertexConditionError);
}

TEST_CASE("recover_bound") {
  CHECK(recover_bound(0.0, 1.0, Branch::ZeroInAplus) == 0.0);
  CHECK(recover_bound(0.0, -5.0, Branch::ZeroInAminus) == -4.0);
  CHECK(recover_bound(-INFINITY, 2.0, Branch::ZeroInAplus) == 2.0);
}

TEST_CASE("edge case probe") {
  CHECK(edge_case_probe(testing::load("extra/allpos.json")));
  CHECK_FALSE(edge_case_probe(testing::load("instances/motzkin.json")));
  CHECK_FALSE(edge_case_probe(ExponentialSum(1, InstanceKind::Exponential)));
}

TEST_CASE("membership flips at gamma_star") {
  const auto f = testing::load("instances/motzkin.json");
  const auto r = dual_sonc_bound(f);
  for (double d : {1e-3, 1.0, 50.0}) {
    const auto above = f.shifted(r.gamma_star + d);
    CHECK(check_membership_tau(DualVector::from_sum(above), sign_split(above)).member);
  }
  for (double d : {1e-3, 1.0}) {
    const auto below = f.shifted(r.gamma_star - d);
    CHECK_FALSE(check_membership_tau(DualVector::from_sum(below), sign_split(below)).member);
  }
}

TEST_CASE("certificates check out on random instances") {
  testing::InstanceGenerator gen(31);
  int bounded = 0;
  for (int i = 0; i < 120; ++i) {
    auto f = gen.next(3, 5, 3, true);
    f = f.with_constant(gen.uniform(-5.0, 5.0));
    const auto r = dual_sonc_bound(f);
    // Near-degenerate draws push gamma_star past what doubles can shift exactly.
    if (r.status != BoundStatus::Bounded || std::isinf(r.c_star) || r.gamma_star > 1e6) continue;
    ++bounded;
    const auto w = shifted_dual_vector(f, r);
    CHECK(certificate_violation(w, sign_split(w.as_function(f.dim(), f.kind())), r.certificate) <=
          1e-7);
  }
  CHECK(bounded > 20);
}

TEST_CASE("shift and scaling behaviour") {
  testing::InstanceGenerator gen(77);
  int bounded = 0;
  for (int i = 0; i < 80; ++i) {
    const auto f = gen.next(3, 5, 3, true);
    const auto r = dual_sonc_bound(f);
    if (r.status != BoundStatus::Bounded || std::abs(r.gamma_star) > 1e6) continue;
    ++bounded;
    for (double t : {-10.0, 0.5, 1e3}) {
      const auto s = dual_sonc_bound(f.shifted(t));
      REQUIRE(s.status == BoundStatus::Bounded);
      CHECK(std::abs(s.gamma_star - (r.gamma_star - t)) <= 1e-7);
    }
    ExponentialSum g(f.dim(), f.kind());
    for (const auto& term : f.terms()) g.add_term(term.exponent, 3.0 * term.coefficient);
    CHECK(dual_sonc_bound(g).gamma_star == doctest::Approx(3.0 * r.gamma_star).epsilon(1e-8));
  }
  CHECK(bounded > 20);
}

TEST_CASE("bound never exceeds the sampled minimum") {
  OracleConfig cfg;
  cfg.grid_points_per_axis = 61;
  cfg.box_radius = 3.0;
  testing::InstanceGenerator gen(123);
  for (int i = 0; i < 40; ++i) {
    const auto f = gen.next(2, 4, 2, true);
    const auto r = dual_sonc_bound(f);
    if (r.status != BoundStatus::Bounded) continue;
    CHECK(r.lower_bound <= sample_min(f, cfg).value + 1e-6);
  }
}

TEST_CASE("relaxed program") {
  SUBCASE("tol is positive where the strict program is infeasible") {
    const auto r = relaxed_bound(testing::load("instances/table5_c3.json"), 1.0);
    CHECK(r.bound.status == BoundStatus::Bounded);
    CHECK(r.tol > 0.0);
    CHECK_FALSE(r.certified());
  }
  SUBCASE("tol vanishes and the strict value is reproduced") {
    const auto f = testing::load("instances/table5_c1.json");
    const auto r = relaxed_bound(f, 1.0);
    CHECK(r.certified());
    CHECK(std::abs(r.bound.gamma_star - dual_sonc_bound(f).gamma_star) <= 1e-8);
  }
  SUBCASE("small epsilon is unbounded, larger epsilon recovers the strict bound") {
    const auto f = testing::load("instances/motzkin.json");
    CHECK(relaxed_bound(f, 1.0).bound.status == BoundStatus::Unbounded);
    const auto r = relaxed_bound(f, 5.0);
    CHECK(r.certified());
    CHECK(r.bound.gamma_star == doctest::Approx(26.0));
  }
  SUBCASE("large epsilon matches the strict program on random instances") {
    testing::InstanceGenerator gen(5);
    for (int i = 0; i < 40; ++i) {
      const auto f = gen.next(3, 5, 2, true);
      const auto strict = dual_sonc_bound(f);
      if (strict.status != BoundStatus::Bounded) continue;
      const auto r = relaxed_bound(f, 1e6);
      CHECK(r.certified());
      CHECK(r.bound.gamma_star == doctest::Approx(strict.gamma_star).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(relaxed_bound(testing::load("instances/motzkin.json"), 0.0),
                  std::invalid_argument);
}

TEST_CASE("repeated solves are identical") {
  const auto f = testing::load("instances/table6_kirkman.json");
  const auto a = dual_sonc_bound(f);
  const auto b = dual_sonc_bound(f);
  CHECK(a.gamma_star == b.gamma_star);
  CHECK(a.certificate.taus == b.certificate.taus);
}
