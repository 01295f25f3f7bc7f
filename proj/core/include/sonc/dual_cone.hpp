#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sonc/barycentric.hpp"
#include "sonc/support.hpp"

namespace sonc {

/// Slack allowed on the log-scale membership inequalities.
inline constexpr double kMembershipTolerance = 1e-8;

/// A linear functional on R^A, stored by its coefficient on each exponent.
/// Through the coefficient identification it is also the exponential sum
/// sum_a w_a e^{<x, a>}.
struct DualVector {
  std::map<Exponent, double> values;

  static DualVector from_sum(const ExponentialSum& f);

  /// w_a, or 0 outside the stored support.
  double operator[](const Exponent& e) const;

  /// The function with coefficients w (zero entries dropped).
  ExponentialSum as_function(std::size_t n, InstanceKind kind) const;

  /// Every entry multiplied by s.
  DualVector scaled(double s) const;
};

/// The natural pairing sum_a w_a c_a.
double pairing(const DualVector& w, const ExponentialSum& f);

/// One tau vector per negative exponent beta, witnessing
/// ln(|w_beta| / w_alpha) <= (alpha - beta)^T tau for every alpha in A+.
struct DualMembershipCertificate {
  std::map<Exponent, std::vector<double>> taus;
};

struct MembershipResult {
  bool member = false;
  std::optional<DualMembershipCertificate> certificate;
  std::string reason;  // set when not a member
};

/// Membership via the tau representation: one feasibility LP per beta.
MembershipResult check_membership_tau(const DualVector& w, const SignDecomposition& dec);

struct LambdaMembershipResult {
  bool member = false;
  std::string reason;
  /// Per beta: argmin of sum lambda_a ln w_a over Lambda(A+, beta), when Lambda
  /// is nonempty.
  std::map<Exponent, LambdaOptimum> witnesses;
};

/// Membership via the lambda representation:
/// ln|w_beta| <= sum lambda_a ln w_a for all lambda in Lambda(A+, beta).
LambdaMembershipResult check_membership_lambda(const DualVector& w,
                                               const SignDecomposition& dec);

/// Largest violation of the tau inequalities by `cert` (<= 0 when all hold).
/// Betas with w_beta = 0 are skipped. Returns +infinity when a required beta
/// has no tau or some alpha has w_alpha = 0 against a nonzero w_beta.
double certificate_violation(const DualVector& w, const SignDecomposition& dec,
                             const DualMembershipCertificate& cert);

}  // namespace sonc
