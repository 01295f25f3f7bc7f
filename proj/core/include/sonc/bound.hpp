#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sonc/dual_cone.hpp"
#include "sonc/lp.hpp"
#include "sonc/support.hpp"

namespace sonc {

/// Which side of the sign split the (shifted) constant term ends up on.
enum class Branch { ZeroInAplus, ZeroInAminus };
enum class BoundStatus { Bounded, Infeasible, Unbounded };

std::string_view to_string(Branch branch);
std::string_view to_string(BoundStatus status);

/// A non-origin vertex of conv(A u {0}) carries a negative coefficient.
class VertexConditionError : public InstanceError {
 public:
  using InstanceError::InstanceError;
};

/// Result of the dual SONC bound: f >= lower_bound = -gamma_star.
struct BoundResult {
  BoundStatus status = BoundStatus::Infeasible;
  Branch branch = Branch::ZeroInAplus;
  double gamma_star = 0.0;
  /// ln|v_0 + gamma_star|; -infinity when the constant can be driven to 0.
  double c_star = 0.0;
  double lower_bound = 0.0;
  double v0 = 0.0;
  DualMembershipCertificate certificate;
  /// c_star = -inf with negative terms present: the certificate (if any)
  /// is for f - v0 itself, checked directly.
  bool degenerate = false;
  std::string diagnostic;
};

/// LP-Relax1 / LP-Relax2 in a fixed variable layout: tau^(betas[k]) occupies
/// columns [k*n, (k+1)*n), then c, then (relaxed programs only) tol.
struct BranchProgram {
  Branch branch = Branch::ZeroInAplus;
  lp::LinearProgram program{0};
  std::vector<Exponent> betas;
  std::size_t n = 0;
  std::size_t c_index = 0;
  std::optional<std::size_t> tol_index;
  double v0 = 0.0;
};

/// Constant-term branch: minimize c subject to
///   (alpha - beta)^T tau^(beta) >= ln(|v_beta| / v_alpha)   for beta in A-, alpha in A+ \ {0}
///   c - beta^T tau^(beta)     >= ln|v_beta|              for beta in A-
/// with the origin removed from both sets.
BranchProgram build_lp_relax1(const ExponentialSum& f, const SignDecomposition& dec);

/// Negative-constant branch (exponential sums with 0 in conv(A+) only): maximize c subject to
///   (alpha - beta)^T tau^(beta) >= ln(|v_beta| / v_alpha)   for beta in A- \ {0}, alpha in A+
///   alpha^T tau^(0) - c        >= -ln v_alpha             for alpha in A+
/// nullopt when the preconditions fail.
std::optional<BranchProgram> build_lp_relax2(const ExponentialSum& f,
                                             const SignDecomposition& dec);

/// v_0 - e^c on ZeroInAplus, v_0 + e^c on ZeroInAminus (e^{-inf} = 0).
double recover_bound(double c_star, double v0, Branch branch);

/// Runs every applicable branch and keeps the smallest gamma_star.
/// Throws InstanceError (VertexConditionError) on invalid input.
BoundResult dual_sonc_bound(const ExponentialSum& f);

/// Result of the tolerance relaxation. tol > 0 means the bound is not certified.
struct RelaxedBoundResult {
  BoundResult bound;
  double tol = 0.0;
  double epsilon = 0.0;
  bool certified() const { return tol == 0.0 && bound.status == BoundStatus::Bounded; }
};

/// Relaxed program: the membership rows of the winning branch get a shared
/// slack tol >= 0, and the objective pays epsilon * tol. Status Unbounded
/// means epsilon is below the marginal value of relaxing those rows.
RelaxedBoundResult relaxed_bound(const ExponentialSum& f, double epsilon);

/// True iff f itself, unshifted, passes check_membership_tau.
bool edge_case_probe(const ExponentialSum& f);

/// f + gamma_star as a dual vector, the vector the certificate speaks about.
DualVector shifted_dual_vector(const ExponentialSum& f, const BoundResult& result);

}  // namespace sonc
