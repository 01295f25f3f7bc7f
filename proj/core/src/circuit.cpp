#include "sonc/circuit.hpp"

#include <cmath>

namespace sonc {

namespace {
constexpr double kThetaTolerance = 1e-9;
}

CircuitInstance CircuitInstance::from_sum(const ExponentialSum& f) {
  CircuitInstance ci;
  bool seen_inner = false;
  for (const auto& t : f.terms()) {
    if (t.coefficient > 0.0) {
      ci.outer.push_back(t.exponent);
      ci.outer_coefficients.push_back(t.coefficient);
    } else {
      if (seen_inner) throw CircuitError("a circuit has exactly one negative term");
      ci.inner_exponent = t.exponent;
      ci.inner_coefficient = t.coefficient;
      seen_inner = true;
    }
  }
  if (!seen_inner) throw CircuitError("a circuit has exactly one negative term");
  if (ci.outer.empty()) throw CircuitError("a circuit needs positive outer terms");
  return ci;
}

CircuitNumber circuit_number(std::span<const double> outer_coefficients,
                             const BarycentricVector& lambda) {
  if (outer_coefficients.size() != lambda.weights.size()) {
    throw CircuitError("coefficient and lambda lengths differ");
  }
  CircuitNumber out;
  out.lambda_used = lambda;
  double log_theta = 0.0;
  for (std::size_t i = 0; i < outer_coefficients.size(); ++i) {
    const double c = outer_coefficients[i];
    if (!(c > 0.0)) throw CircuitError("outer coefficients must be positive");
    const double l = lambda.weights[i];
    if (l > 0.0) log_theta += l * (std::log(c) - std::log(l));  // 0 ln(0/y) = 0
  }
  out.log_theta = log_theta;
  out.theta = std::exp(log_theta);
  return out;
}

CircuitVerdict circuit_nonnegative(const CircuitInstance& ci) {
  if (!affinely_independent(ci.outer)) {
    throw CircuitError("outer exponents are affinely dependent");
  }
  auto lambda = lambda_feasible(ci.outer, ci.inner_exponent);
  if (!lambda) throw CircuitError("inner exponent lies outside the outer simplex");
  CircuitVerdict v;
  v.number = circuit_number(ci.outer_coefficients, *lambda);
  v.nonnegative = ci.inner_coefficient >= 0.0 ||
                  std::abs(ci.inner_coefficient) <= v.number.theta + kThetaTolerance;
  return v;
}

bool age_witness_check(const DualVector& w, std::span<const Exponent> a_plus,
                       const Exponent& beta, const BarycentricVector& lambda,
                       double tolerance) {
  if (!lambda.reproduces(a_plus, beta)) {
    throw CircuitError("lambda is not in Lambda(A+, beta)");
  }
  const double wb = w[beta];
  if (wb >= 0.0) return true;
  std::vector<double> coeffs;
  BarycentricVector support;
  for (std::size_t i = 0; i < a_plus.size(); ++i) {
    const double c = w[a_plus[i]];
    if (lambda.weights[i] > 0.0) {
      if (!(c > 0.0)) return false;  // (0 / lambda)^lambda = 0
      coeffs.push_back(c);
      support.weights.push_back(lambda.weights[i]);
    }
  }
  const auto number = circuit_number(coeffs, support);
  return number.theta >= -wb - tolerance;
}

}  // namespace sonc
