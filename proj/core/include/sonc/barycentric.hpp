#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sonc/support.hpp"

namespace sonc {

/// Residual tolerance for sum(lambda) = 1 and sum(lambda * alpha) = beta.
inline constexpr double kBarycentricTolerance = 1e-9;

/// lambda in Lambda(A+, beta) = { lambda >= 0 : sum lambda_a a = beta, sum lambda_a = 1 }.
/// weights[i] belongs to the i-th point of the A+ list it was computed for.
struct BarycentricVector {
  std::vector<double> weights;

  double sum() const;
  /// sum_i weights[i] * points[i].
  std::vector<double> combine(std::span<const Exponent> points) const;
  /// Checks the simplex and reproduction residuals against kBarycentricTolerance.
  bool reproduces(std::span<const Exponent> points, const Exponent& beta) const;
};

/// Any lambda in Lambda(points, beta), or nullopt when beta is outside conv(points).
std::optional<BarycentricVector> lambda_feasible(std::span<const Exponent> points,
                                                 const Exponent& beta);

struct LambdaOptimum {
  BarycentricVector lambda;
  double value;
};

/// min sum_a lambda_a cost_a over Lambda(points, beta). A cost of +infinity
/// pins that lambda_a to 0. nullopt when no admissible lambda exists.
std::optional<LambdaOptimum> minimize_linear_over_lambda(std::span<const Exponent> points,
                                                         const Exponent& beta,
                                                         std::span<const double> cost);

/// Rank test on the lifted points (a, 1).
bool affinely_independent(std::span<const Exponent> points);

}  // namespace sonc
