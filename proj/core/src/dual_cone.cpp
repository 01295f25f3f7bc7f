#include "sonc/dual_cone.hpp"

#include <cmath>
#include <limits>

#include "sonc/lp.hpp"

namespace sonc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shared sign preconditions of both representations. Empty string when ok.
std::string precondition_failure(const DualVector& w, const SignDecomposition& dec) {
  for (const auto& [e, is_vertex] : dec.vertex_flags) {
    if (is_vertex && w[e] < 0.0) {
      return "negative vertex coefficient at " + e.to_string();
    }
  }
  for (const auto& a : dec.a_plus) {
    if (w[a] < 0.0) return "negative coefficient on A+ at " + a.to_string();
  }
  return {};
}

}  // namespace

DualVector DualVector::from_sum(const ExponentialSum& f) {
  DualVector w;
  for (const auto& t : f.terms()) w.values[t.exponent] = t.coefficient;
  return w;
}

double DualVector::operator[](const Exponent& e) const {
  auto it = values.find(e);
  return it == values.end() ? 0.0 : it->second;
}

ExponentialSum DualVector::as_function(std::size_t n, InstanceKind kind) const {
  ExponentialSum f(n, kind);
  for (const auto& [e, v] : values) f.add_term(e, v);
  return f;
}

DualVector DualVector::scaled(double s) const {
  DualVector out = *this;
  for (auto& [e, v] : out.values) v *= s;
  return out;
}

double pairing(const DualVector& w, const ExponentialSum& f) {
  double s = 0.0;
  for (const auto& t : f.terms()) s += w[t.exponent] * t.coefficient;
  return s;
}

MembershipResult check_membership_tau(const DualVector& w, const SignDecomposition& dec) {
  MembershipResult out;
  if (auto why = precondition_failure(w, dec); !why.empty()) {
    out.reason = std::move(why);
    return out;
  }
  DualMembershipCertificate cert;
  for (const auto& beta : dec.a_minus) {
    const double wb = std::abs(w[beta]);
    if (wb == 0.0) continue;
    const std::size_t n = beta.dim();
    lp::LinearProgram prog(n);
    for (const auto& alpha : dec.a_plus) {
      const double wa = w[alpha];
      if (wa == 0.0) {
        out.reason = "zero coefficient at " + alpha.to_string() + " against beta " +
                     beta.to_string();
        return out;
      }
      const auto diff = alpha - beta;
      prog.add_constraint(std::vector<double>(diff.coords().begin(), diff.coords().end()),
                          lp::Relation::GreaterEqual, std::log(wb / wa));
    }
    auto sol = lp::solve(prog);
    if (sol.status != lp::Status::Optimal) {
      out.reason = "tau system infeasible for beta " + beta.to_string();
      return out;
    }
    cert.taus.emplace(beta, std::move(sol.point));
  }
  out.member = true;
  out.certificate = std::move(cert);
  return out;
}

LambdaMembershipResult check_membership_lambda(const DualVector& w,
                                               const SignDecomposition& dec) {
  LambdaMembershipResult out;
  if (auto why = precondition_failure(w, dec); !why.empty()) {
    out.reason = std::move(why);
    return out;
  }
  const auto& plus = dec.a_plus;
  for (const auto& beta : dec.a_minus) {
    const double wb = std::abs(w[beta]);
    if (wb == 0.0) continue;
    // With ln 0 = -inf, any lambda putting weight on a zero coefficient
    // drives the right-hand side to -inf.
    std::vector<double> zero_probe(plus.size(), 0.0);
    bool has_zero = false;
    for (std::size_t i = 0; i < plus.size(); ++i) {
      if (w[plus[i]] == 0.0) {
        zero_probe[i] = -1.0;
        has_zero = true;
      }
    }
    if (has_zero) {
      auto probe = minimize_linear_over_lambda(plus, beta, zero_probe);
      if (probe && probe->value < -kBarycentricTolerance) {
        out.reason = "lambda reaches a zero coefficient for beta " + beta.to_string();
        return out;
      }
    }
    std::vector<double> cost(plus.size());
    for (std::size_t i = 0; i < plus.size(); ++i) {
      const double wa = w[plus[i]];
      cost[i] = wa == 0.0 ? kInf : std::log(wa);
    }
    auto opt = minimize_linear_over_lambda(plus, beta, cost);
    if (!opt) continue;  // empty Lambda: the universal condition holds vacuously
    const double threshold = std::log(wb);
    if (opt->value < threshold - kMembershipTolerance) {
      out.reason = "min over Lambda is " + std::to_string(opt->value) + " < ln|w_beta| = " +
                   std::to_string(threshold) + " for beta " + beta.to_string();
      out.witnesses.emplace(beta, std::move(*opt));
      return out;
    }
    out.witnesses.emplace(beta, std::move(*opt));
  }
  out.member = true;
  return out;
}

double certificate_violation(const DualVector& w, const SignDecomposition& dec,
                             const DualMembershipCertificate& cert) {
  double worst = -kInf;
  for (const auto& beta : dec.a_minus) {
    const double wb = std::abs(w[beta]);
    if (wb == 0.0) continue;
    auto it = cert.taus.find(beta);
    if (it == cert.taus.end()) return kInf;
    const auto& tau = it->second;
    for (const auto& alpha : dec.a_plus) {
      const double wa = w[alpha];
      if (wa <= 0.0) return kInf;
      const auto diff = alpha - beta;
      const double lhs = std::log(wb / wa);
      worst = std::max(worst, lhs - diff.dot(tau));
    }
  }
  return worst == -kInf ? 0.0 : worst;
}

}  // namespace sonc
