#include "sonc/bound.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sonc/barycentric.hpp"

namespace sonc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sign split with the origin pulled out; its coefficient becomes v0.
struct OriginSplit {
  double v0 = 0.0;
  std::vector<Exponent> plus;
  std::vector<Exponent> minus;
};

OriginSplit split_origin(const ExponentialSum& f, const SignDecomposition& dec) {
  OriginSplit s;
  s.v0 = f.constant_term();
  for (const auto& a : dec.a_plus) {
    if (!a.is_zero()) s.plus.push_back(a);
  }
  for (const auto& b : dec.a_minus) {
    if (!b.is_zero()) s.minus.push_back(b);
  }
  return s;
}

void check_vertices_with_origin(const ExponentialSum& f) {
  auto points = f.support();
  const auto origin = Exponent::zero(f.dim());
  if (!f.contains(origin)) points.push_back(origin);
  for (const auto& t : f.terms()) {
    if (t.coefficient < 0.0 && !t.exponent.is_zero() && is_vertex(points, t.exponent)) {
      throw VertexConditionError("vertex " + t.exponent.to_string() +
                                 " of conv(A u {0}) has negative coefficient " +
                                 std::to_string(t.coefficient));
    }
  }
}

bool relax2_applicable(const ExponentialSum& f, const OriginSplit& s) {
  if (f.kind() != InstanceKind::Exponential || s.plus.empty()) return false;
  return lambda_feasible(s.plus, Exponent::zero(f.dim())).has_value();
}

// Builds either branch; `epsilon` adds the shared slack tol to the membership rows.
BranchProgram build_branch(const ExponentialSum& f, const OriginSplit& s, Branch branch,
                           std::optional<double> epsilon) {
  BranchProgram bp;
  bp.branch = branch;
  bp.n = f.dim();
  bp.v0 = s.v0;
  bp.betas = s.minus;
  if (branch == Branch::ZeroInAminus) bp.betas.push_back(Exponent::zero(bp.n));
  const std::size_t n = bp.n;
  bp.c_index = bp.betas.size() * n;
  std::size_t num_vars = bp.c_index + 1;
  if (epsilon) {
    bp.tol_index = num_vars;
    ++num_vars;
  }
  lp::LinearProgram prog(num_vars, lp::Sense::Minimize);
  if (bp.tol_index) prog.set_bound(*bp.tol_index, lp::Bound::NonNegative);

  auto add_membership_row = [&](std::size_t k, const Exponent& alpha, const Exponent& beta,
                                double rhs) {
    std::vector<double> row(num_vars, 0.0);
    const auto diff = alpha - beta;
    for (std::size_t i = 0; i < n; ++i) row[k * n + i] = diff[i];
    if (bp.tol_index) row[*bp.tol_index] = 1.0;
    prog.add_constraint(std::move(row), lp::Relation::GreaterEqual, rhs);
  };

  for (std::size_t k = 0; k < s.minus.size(); ++k) {
    const auto& beta = s.minus[k];
    const double wb = std::abs(f.coefficient(beta));
    for (const auto& alpha : s.plus) {
      add_membership_row(k, alpha, beta, std::log(wb / f.coefficient(alpha)));
    }
    if (branch == Branch::ZeroInAplus) {
      // ln|v_beta| - c <= -beta^T tau
      std::vector<double> row(num_vars, 0.0);
      for (std::size_t i = 0; i < n; ++i) row[k * n + i] = -beta[i];
      row[bp.c_index] = 1.0;
      prog.add_constraint(std::move(row), lp::Relation::GreaterEqual, std::log(wb));
    }
  }
  if (branch == Branch::ZeroInAminus) {
    const std::size_t k = s.minus.size();
    for (const auto& alpha : s.plus) {
      // c - ln v_alpha <= alpha^T tau^(0)
      std::vector<double> row(num_vars, 0.0);
      for (std::size_t i = 0; i < n; ++i) row[k * n + i] = alpha[i];
      row[bp.c_index] = -1.0;
      prog.add_constraint(std::move(row), lp::Relation::GreaterEqual,
                          -std::log(f.coefficient(alpha)));
    }
  }
  const double direction = branch == Branch::ZeroInAplus ? 1.0 : -1.0;
  prog.set_objective_coefficient(bp.c_index, direction);
  if (epsilon) prog.set_objective_coefficient(*bp.tol_index, *epsilon);
  bp.program = std::move(prog);
  return bp;
}

DualMembershipCertificate extract_taus(const BranchProgram& bp,
                                       const std::vector<double>& point) {
  DualMembershipCertificate cert;
  for (std::size_t k = 0; k < bp.betas.size(); ++k) {
    cert.taus.emplace(bp.betas[k], std::vector<double>(point.begin() + k * bp.n,
                                                       point.begin() + (k + 1) * bp.n));
  }
  return cert;
}

struct BranchOutcome {
  BoundResult result;
  double tol = 0.0;
};

BranchOutcome run_branch(const ExponentialSum& f, const BranchProgram& bp) {
  BranchOutcome out;
  BoundResult& r = out.result;
  r.branch = bp.branch;
  r.v0 = bp.v0;
  const auto sol = lp::solve(bp.program);
  switch (sol.status) {
    case lp::Status::Infeasible:
      r.status = BoundStatus::Infeasible;
      r.diagnostic = bp.branch == Branch::ZeroInAplus ? "LP-Relax1 infeasible"
                                                      : "LP-Relax2 infeasible";
      return out;
    case lp::Status::Unbounded:
      if (bp.branch == Branch::ZeroInAminus || bp.tol_index) {
        r.status = BoundStatus::Unbounded;
        r.diagnostic = bp.tol_index ? "relaxed program unbounded; increase epsilon"
                                    : "LP-Relax2 unbounded";
        return out;
      }
      // c -> -inf: the constant can be driven to 0, bound is v0.
      r.status = BoundStatus::Bounded;
      r.c_star = -kInf;
      r.lower_bound = bp.v0;
      r.gamma_star = -bp.v0;
      if (!bp.betas.empty()) {
        r.degenerate = true;
        const auto stripped = f.with_constant(0.0);
        if (!stripped.empty()) {
          const auto dec = sign_split(stripped);
          auto m = check_membership_tau(DualVector::from_sum(stripped), dec);
          if (m.member) {
            r.certificate = std::move(*m.certificate);
          } else {
            r.diagnostic = "bound is a limit; f - v0 has no finite tau certificate";
          }
        }
      }
      return out;
    case lp::Status::Optimal:
      break;
  }
  r.status = BoundStatus::Bounded;
  r.c_star = sol.point[bp.c_index];
  r.lower_bound = recover_bound(r.c_star, bp.v0, bp.branch);
  r.gamma_star = -r.lower_bound;
  r.certificate = extract_taus(bp, sol.point);
  if (bp.tol_index) out.tol = sol.point[*bp.tol_index];
  return out;
}

// Smallest gamma_star among bounded outcomes; ties go to ZeroInAplus.
const BranchOutcome* pick(const std::vector<BranchOutcome>& outcomes) {
  const BranchOutcome* best = nullptr;
  for (const auto& o : outcomes) {
    if (o.result.status != BoundStatus::Bounded) continue;
    if (!best || o.result.gamma_star < best->result.gamma_star) best = &o;
  }
  return best;
}

}  // namespace

std::string_view to_string(Branch branch) {
  return branch == Branch::ZeroInAplus ? "zero_in_a_plus" : "zero_in_a_minus";
}

std::string_view to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::Bounded:
      return "bounded";
    case BoundStatus::Infeasible:
      return "infeasible";
    case BoundStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

BranchProgram build_lp_relax1(const ExponentialSum& f, const SignDecomposition& dec) {
  return build_branch(f, split_origin(f, dec), Branch::ZeroInAplus, std::nullopt);
}

std::optional<BranchProgram> build_lp_relax2(const ExponentialSum& f,
                                             const SignDecomposition& dec) {
  const auto s = split_origin(f, dec);
  if (!relax2_applicable(f, s)) return std::nullopt;
  return build_branch(f, s, Branch::ZeroInAminus, std::nullopt);
}

double recover_bound(double c_star, double v0, Branch branch) {
  const double e = std::exp(c_star);  // exp(-inf) = 0
  return branch == Branch::ZeroInAplus ? v0 - e : v0 + e;
}

BoundResult dual_sonc_bound(const ExponentialSum& f) {
  const auto dec = sign_split(f);
  check_vertices_with_origin(f);
  const auto s = split_origin(f, dec);

  std::vector<BranchOutcome> outcomes;
  outcomes.push_back(run_branch(f, build_branch(f, s, Branch::ZeroInAplus, std::nullopt)));
  if (relax2_applicable(f, s)) {
    outcomes.push_back(
        run_branch(f, build_branch(f, s, Branch::ZeroInAminus, std::nullopt)));
  }
  if (const auto* best = pick(outcomes)) return best->result;

  BoundResult r;
  r.status = BoundStatus::Infeasible;
  r.v0 = s.v0;
  r.gamma_star = kInf;
  r.c_star = std::numeric_limits<double>::quiet_NaN();
  r.lower_bound = -kInf;
  r.diagnostic = outcomes.front().result.diagnostic;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    r.diagnostic += "; " + outcomes[i].result.diagnostic;
  }
  return r;
}

RelaxedBoundResult relaxed_bound(const ExponentialSum& f, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  const auto dec = sign_split(f);
  check_vertices_with_origin(f);
  const auto s = split_origin(f, dec);

  std::vector<Branch> branches{Branch::ZeroInAplus};
  if (relax2_applicable(f, s)) branches.push_back(Branch::ZeroInAminus);

  std::vector<BranchOutcome> outcomes;
  for (Branch b : branches) {
    // When the strict program already lets c reach -inf, tol has nothing to buy.
    auto strict = run_branch(f, build_branch(f, s, b, std::nullopt));
    if (strict.result.status == BoundStatus::Bounded && std::isinf(strict.result.c_star)) {
      outcomes.push_back(std::move(strict));
      continue;
    }
    outcomes.push_back(run_branch(f, build_branch(f, s, b, epsilon)));
  }

  RelaxedBoundResult out;
  out.epsilon = epsilon;
  if (const auto* best = pick(outcomes)) {
    out.bound = best->result;
    out.tol = best->tol;
    return out;
  }
  out.bound = outcomes.front().result;
  out.bound.gamma_star = kInf;
  out.bound.lower_bound = -kInf;
  return out;
}

bool edge_case_probe(const ExponentialSum& f) {
  if (f.empty()) return false;
  SignDecomposition dec;
  try {
    dec = sign_split(f);
  } catch (const InstanceError&) {
    return false;
  }
  return check_membership_tau(DualVector::from_sum(f), dec).member;
}

DualVector shifted_dual_vector(const ExponentialSum& f, const BoundResult& result) {
  auto w = DualVector::from_sum(f);
  const auto origin = Exponent::zero(f.dim());
  const double e = std::exp(result.c_star);
  const double w0 = result.branch == Branch::ZeroInAplus ? e : -e;
  if (w0 == 0.0) {
    w.values.erase(origin);
  } else {
    w.values[origin] = w0;
  }
  return w;
}

}  // namespace sonc
