#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "sonc/barycentric.hpp"
#include "sonc/dual_cone.hpp"
#include "sonc/support.hpp"

namespace sonc {

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Positive outer terms plus a single inner term c_beta e^{<x, beta>}.
struct CircuitInstance {
  std::vector<Exponent> outer;
  std::vector<double> outer_coefficients;
  Exponent inner_exponent;
  double inner_coefficient = 0.0;

  /// Reads a sum with exactly one negative term; the positive terms are the outer ones.
  static CircuitInstance from_sum(const ExponentialSum& f);
};

struct CircuitNumber {
  double theta = 0.0;
  double log_theta = 0.0;
  BarycentricVector lambda_used;
};

/// Theta = prod_{lambda_a > 0} (c_a / lambda_a)^{lambda_a}, accumulated in log space.
/// Throws CircuitError on a nonpositive coefficient or a length mismatch.
CircuitNumber circuit_number(std::span<const double> outer_coefficients,
                             const BarycentricVector& lambda);

struct CircuitVerdict {
  bool nonnegative = false;
  CircuitNumber number;
};

/// |c_beta| <= Theta, or c_beta >= 0. Throws CircuitError when the outer
/// exponents are affinely dependent or beta lies outside their hull.
CircuitVerdict circuit_nonnegative(const CircuitInstance& ci);

/// Theta(w on A+, lambda) >= -w_beta - tolerance at a fixed witness lambda in
/// Lambda(A+, beta). Throws CircuitError when lambda does not reproduce beta.
bool age_witness_check(const DualVector& w, std::span<const Exponent> a_plus,
                       const Exponent& beta, const BarycentricVector& lambda,
                       double tolerance = 1e-9);

}  // namespace sonc
