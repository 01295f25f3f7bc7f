#include "sonc/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sonc/lp.hpp"

namespace sonc {

double BarycentricVector::sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

std::vector<double> BarycentricVector::combine(std::span<const Exponent> points) const {
  std::vector<double> out(points.empty() ? 0 : points.front().dim(), 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += weights[i] * points[i][k];
  }
  return out;
}

bool BarycentricVector::reproduces(std::span<const Exponent> points,
                                   const Exponent& beta) const {
  if (weights.size() != points.size()) return false;
  if (std::abs(sum() - 1.0) > kBarycentricTolerance) return false;
  for (double w : weights) {
    if (w < -1e-12) return false;
  }
  const auto point = combine(points);
  for (std::size_t k = 0; k < point.size(); ++k) {
    if (std::abs(point[k] - beta[k]) > kBarycentricTolerance) return false;
  }
  return true;
}

namespace {

lp::LinearProgram lambda_program(std::span<const Exponent> points, const Exponent& beta) {
  if (points.empty()) throw std::invalid_argument("Lambda(A+, beta) needs a nonempty A+");
  const std::size_t n = beta.dim();
  lp::LinearProgram prog(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != n) throw std::invalid_argument("exponent dimension mismatch");
    prog.set_bound(i, lp::Bound::NonNegative);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> row(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) row[i] = points[i][k];
    prog.add_constraint(std::move(row), lp::Relation::Equal, beta[k]);
  }
  prog.add_constraint(std::vector<double>(points.size(), 1.0), lp::Relation::Equal, 1.0);
  return prog;
}

BarycentricVector clean(std::vector<double> w) {
  for (double& x : w) {
    if (x < 0.0 && x > -1e-12) x = 0.0;
  }
  return {std::move(w)};
}

}  // namespace

std::optional<BarycentricVector> lambda_feasible(std::span<const Exponent> points,
                                                 const Exponent& beta) {
  auto prog = lambda_program(points, beta);
  auto sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  return clean(std::move(sol.point));
}

std::optional<LambdaOptimum> minimize_linear_over_lambda(std::span<const Exponent> points,
                                                         const Exponent& beta,
                                                         std::span<const double> cost) {
  if (cost.size() != points.size()) {
    throw std::invalid_argument("cost vector length must match the number of points");
  }
  auto prog = lambda_program(points, beta);
  std::vector<double> objective(points.size(), 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::isinf(cost[i]) && cost[i] > 0) {
      std::vector<double> pin(points.size(), 0.0);
      pin[i] = 1.0;
      prog.add_constraint(std::move(pin), lp::Relation::Equal, 0.0);
    } else if (std::isnan(cost[i]) || std::isinf(cost[i])) {
      throw std::invalid_argument("cost must be finite or +infinity");
    } else {
      objective[i] = cost[i];
    }
  }
  prog.set_objective(std::move(objective));
  auto sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  LambdaOptimum out{clean(std::move(sol.point)), 0.0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (out.lambda.weights[i] != 0.0) out.value += out.lambda.weights[i] * cost[i];
  }
  return out;
}

bool affinely_independent(std::span<const Exponent> points) {
  if (points.empty()) return true;
  const std::size_t n = points.front().dim();
  const std::size_t rows = points.size();
  const std::size_t cols = n + 1;
  if (rows > cols) return false;
  std::vector<double> m(rows * cols);
  double scale = 1.0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      m[i * cols + k] = points[i][k];
      scale = std::max(scale, std::abs(points[i][k]));
    }
    m[i * cols + n] = 1.0;
  }
  const double tol = 1e-10 * scale;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (std::abs(m[r * cols + c]) > std::abs(m[piv * cols + c])) piv = r;
    }
    if (std::abs(m[piv * cols + c]) <= tol) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[rank * cols + k]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const double f = m[r * cols + c] / m[rank * cols + c];
      for (std::size_t k = c; k < cols; ++k) m[r * cols + k] -= f * m[rank * cols + k];
    }
    ++rank;
  }
  return rank == rows;
}

}  // namespace sonc
