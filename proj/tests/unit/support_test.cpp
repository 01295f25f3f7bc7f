#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "paths.hpp"
#include "sonc/support.hpp"

using namespace sonc;

TEST_CASE("exponent basics") {
  Exponent a{2, 2};
  CHECK(a.dim() == 2);
  CHECK(a.is_lattice_point());
  CHECK_FALSE(a.is_zero());
  CHECK(Exponent::zero(3).is_zero());
  CHECK_FALSE(Exponent({0.5, 1}).is_lattice_point());
  CHECK_FALSE(Exponent({-1, 1}).is_lattice_point());
  CHECK((Exponent{4, 2} - Exponent{2, 2}) == Exponent{2, 0});
  CHECK(a.to_string() == "(2,2)");
  const double x[] = {1.0, -0.5};
  CHECK(a.dot(x) == doctest::Approx(1.0));
}

TEST_CASE("add_term rejects bad input") {
  ExponentialSum f(2, InstanceKind::Polynomial);
  f.add_term({1, 1}, 1.0);
  CHECK_THROWS_AS(f.add_term({1, 1}, 2.0), InstanceError);
  CHECK_THROWS_AS(f.add_term({1}, 2.0), InstanceError);
  CHECK_THROWS_AS(f.add_term({0.5, 1}, 2.0), InstanceError);
  CHECK_THROWS_AS(f.add_term({2, 1}, std::nan("")), InstanceError);
  f.add_term({3, 3}, 0.0);
  CHECK(f.size() == 1);

  ExponentialSum g(1, InstanceKind::Exponential);
  g.add_term({0.5}, 1.0);
  g.add_term({-1.5}, 1.0);
  CHECK(g.size() == 2);
}

TEST_CASE("parse motzkin and split signs") {
  const auto f = testing::load("instances/motzkin.json");
  CHECK(f.dim() == 2);
  CHECK(f.kind() == InstanceKind::Polynomial);
  CHECK(f.size() == 4);
  CHECK(f.constant_term() == 1.0);
  CHECK(f.coefficient({2, 2}) == -3.0);

  const auto dec = sign_split(f);
  CHECK(dec.a_plus.size() == 3);
  REQUIRE(dec.a_minus.size() == 1);
  CHECK(dec.a_minus[0] == Exponent{2, 2});
  CHECK(dec.is_vertex({4, 2}));
  CHECK(dec.is_vertex({0, 0}));
  CHECK_FALSE(dec.is_vertex({2, 2}));
  CHECK(validate_vertex_condition(f).empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_instance("not json"), InstanceError);
  CHECK_THROWS_AS(parse_instance(R"({"n": 2})"), InstanceError);
  CHECK_THROWS_AS(parse_instance(R"({"n": 1, "terms": [{"exp": [1, 2], "coef": 1}]})"),
                  InstanceError);
  CHECK_THROWS_AS(
      parse_instance(R"({"n": 1, "terms": [{"exp": [1], "coef": 1}, {"exp": [1], "coef": 0}]})"),
      InstanceError);
  CHECK_THROWS_AS(load_instance("/nonexistent/file.json"), InstanceError);
  const auto f = parse_instance(R"({"n": 1, "terms": [{"exp": [2], "coef": 1}]})");
  CHECK(f.kind() == InstanceKind::Polynomial);
}

TEST_CASE("sign_split rejects empty and all-negative sums") {
  ExponentialSum f(1, InstanceKind::Exponential);
  CHECK_THROWS_AS(sign_split(f), InstanceError);
  f.add_term({1}, -1.0);
  CHECK_THROWS_AS(sign_split(f), InstanceError);
}

TEST_CASE("negative vertex is reported") {
  ExponentialSum f(1, InstanceKind::Polynomial);
  f.add_term({0}, 1.0);
  f.add_term({2}, -1.0);
  const auto v = validate_vertex_condition(f);
  REQUIRE(v.size() == 1);
  CHECK(v[0].exponent == Exponent{2});
}

TEST_CASE("json round trip") {
  const auto f = testing::load("instances/table6_kirkman.json");
  const auto g = parse_instance(instance_to_json(f));
  REQUIRE(g.size() == f.size());
  for (const auto& t : f.terms()) CHECK(g.coefficient(t.exponent) == t.coefficient);
}

TEST_CASE("shifted and with_constant") {
  const auto f = testing::load("instances/motzkin.json");
  CHECK(f.shifted(2.5).constant_term() == 3.5);
  CHECK_FALSE(f.shifted(-1.0).contains(Exponent::zero(2)));
  CHECK(f.with_constant(-7.0).constant_term() == -7.0);
}

TEST_CASE("evaluate motzkin at the minimizer and is order independent") {
  const auto f = testing::load("instances/motzkin.json");
  const double origin[] = {0.0, 0.0};
  CHECK(evaluate(f, origin) == doctest::Approx(0.0));

  std::mt19937_64 rng(7);
  auto terms = f.terms();
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(terms.begin(), terms.end(), rng);
    ExponentialSum g(2, InstanceKind::Polynomial);
    for (const auto& t : terms) g.add_term(t.exponent, t.coefficient);
    const double x[] = {u(rng), u(rng)};
    CHECK(evaluate(g, x) == doctest::Approx(evaluate(f, x)).epsilon(1e-12));
  }
}
