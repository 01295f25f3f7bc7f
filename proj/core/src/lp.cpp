#include "sonc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sonc::lp {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Optimal:
      return "optimal";
    case Status::Infeasible:
      return "infeasible";
    case Status::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

LinearProgram::LinearProgram(std::size_t num_variables, Sense sense)
    : sense_(sense),
      objective_(num_variables, 0.0),
      bounds_(num_variables, Bound::Free) {}

void LinearProgram::set_objective(std::vector<double> coefficients) {
  if (coefficients.size() != num_variables()) {
    throw std::invalid_argument("objective length does not match variable count");
  }
  objective_ = std::move(coefficients);
}

void LinearProgram::set_objective_coefficient(std::size_t var, double value) {
  objective_.at(var) = value;
}

void LinearProgram::set_bound(std::size_t var, Bound bound) { bounds_.at(var) = bound; }

void LinearProgram::add_constraint(std::vector<double> coefficients, Relation relation,
                                   double rhs) {
  if (coefficients.size() != num_variables()) {
    throw std::invalid_argument("constraint length does not match variable count");
  }
  if (!std::isfinite(rhs)) {
    throw std::invalid_argument("constraint right-hand side must be finite");
  }
  constraints_.push_back({std::move(coefficients), relation, rhs});
}

double LinearProgram::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (const auto& row : constraints_) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coefficients[j] * x[j];
    double v = 0.0;
    switch (row.relation) {
      case Relation::LessEqual:
        v = lhs - row.rhs;
        break;
      case Relation::GreaterEqual:
        v = row.rhs - lhs;
        break;
      case Relation::Equal:
        v = std::abs(lhs - row.rhs);
        break;
    }
    worst = std::max(worst, v);
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (bounds_[j] == Bound::NonNegative) worst = std::max(worst, -x[j]);
  }
  return worst;
}

namespace {

constexpr double kOptimalityTolerance = 1e-9;
constexpr double kZeroSnap = 1e-14;

enum class ColumnKind { Structural, Slack, Artificial };

// Tableau in standard form: min d^T z, T z = b, z >= 0, with an explicit
// basis. Row m holds reduced costs; column `cols` holds the right-hand side.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& options) : options_(options) {
    const std::size_t n = lp.num_variables();
    // Map original variables onto nonnegative columns.
    for (std::size_t j = 0; j < n; ++j) {
      pos_col_.push_back(kinds_.size());
      kinds_.push_back(ColumnKind::Structural);
      if (lp.bound(j) == Bound::Free) {
        neg_col_.push_back(kinds_.size());
        kinds_.push_back(ColumnKind::Structural);
      } else {
        neg_col_.push_back(npos);
      }
    }
    const auto& rows = lp.constraints();
    m_ = rows.size();
    // Decide slack / artificial columns per row after normalizing rhs >= 0.
    std::vector<int> flip(m_, 1);
    std::vector<Relation> rel(m_);
    std::vector<std::size_t> slack_col(m_, npos), art_col(m_, npos);
    for (std::size_t i = 0; i < m_; ++i) {
      rel[i] = rows[i].relation;
      if (rows[i].rhs < 0.0) {
        flip[i] = -1;
        if (rel[i] == Relation::LessEqual) {
          rel[i] = Relation::GreaterEqual;
        } else if (rel[i] == Relation::GreaterEqual) {
          rel[i] = Relation::LessEqual;
        }
      }
      if (rel[i] != Relation::Equal) {
        slack_col[i] = kinds_.size();
        kinds_.push_back(ColumnKind::Slack);
      }
      if (rel[i] != Relation::LessEqual) {
        art_col[i] = kinds_.size();
        kinds_.push_back(ColumnKind::Artificial);
      }
    }
    cols_ = kinds_.size();
    width_ = cols_ + 1;
    data_.assign((m_ + 1) * width_, 0.0);
    basis_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i) {
      const double s = flip[i];
      for (std::size_t j = 0; j < n; ++j) {
        const double a = s * rows[i].coefficients[j];
        at(i, pos_col_[j]) = a;
        if (neg_col_[j] != npos) at(i, neg_col_[j]) = -a;
      }
      rhs(i) = s * rows[i].rhs;
      if (slack_col[i] != npos) {
        at(i, slack_col[i]) = rel[i] == Relation::LessEqual ? 1.0 : -1.0;
      }
      basis_[i] = art_col[i] != npos ? art_col[i] : slack_col[i];
      if (art_col[i] != npos) at(i, art_col[i]) = 1.0;
    }
    // Original costs in minimization form.
    const double sense = lp.sense() == Sense::Minimize ? 1.0 : -1.0;
    cost_.assign(cols_, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      cost_[pos_col_[j]] = sense * lp.objective()[j];
      if (neg_col_[j] != npos) cost_[neg_col_[j]] = -sense * lp.objective()[j];
    }
    cap_ = options_.iteration_factor * (m_ + cols_ + 1);
  }

  LpSolution run(const LinearProgram& lp) {
    LpSolution out;
    // Phase 1: minimize the sum of artificials.
    std::vector<double> phase1(cols_, 0.0);
    bool any_artificial = false;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (kinds_[j] == ColumnKind::Artificial) {
        phase1[j] = 1.0;
        any_artificial = true;
      }
    }
    if (any_artificial) {
      load_costs(phase1);
      if (iterate(/*allow_artificial=*/true) == Status::Unbounded) {
        // Phase 1 is bounded below by 0; reaching here means breakdown.
        throw NumericalError("simplex phase 1 reported an unbounded direction");
      }
      const double infeasibility = -rhs(m_);
      if (infeasibility > options_.feasibility_tolerance) {
        out.status = Status::Infeasible;
        out.iterations = iterations_;
        return out;
      }
      drive_out_artificials();
    }
    load_costs(cost_);
    if (iterate(/*allow_artificial=*/false) == Status::Unbounded) {
      out.status = Status::Unbounded;
      out.iterations = iterations_;
      return out;
    }
    std::vector<double> z(cols_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] != npos) z[basis_[i]] = rhs(i);
    }
    out.point.assign(lp.num_variables(), 0.0);
    for (std::size_t j = 0; j < lp.num_variables(); ++j) {
      out.point[j] = z[pos_col_[j]] - (neg_col_[j] != npos ? z[neg_col_[j]] : 0.0);
    }
    out.objective_value = 0.0;
    for (std::size_t j = 0; j < lp.num_variables(); ++j) {
      out.objective_value += lp.objective()[j] * out.point[j];
    }
    out.status = Status::Optimal;
    out.iterations = iterations_;
    return out;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  double& at(std::size_t i, std::size_t j) { return data_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * width_ + j]; }
  double& rhs(std::size_t i) { return data_[i * width_ + cols_]; }
  double& reduced(std::size_t j) { return data_[m_ * width_ + j]; }

  void load_costs(const std::vector<double>& c) {
    for (std::size_t j = 0; j < cols_; ++j) reduced(j) = c[j];
    rhs(m_) = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] == npos) continue;
      const double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) data_[m_ * width_ + j] -= cb * at(i, j);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    for (std::size_t j = 0; j <= cols_; ++j) at(row, j) /= p;
    at(row, col) = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double factor = at(i, col);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        double& v = at(i, j);
        v -= factor * at(row, j);
        if (std::abs(v) < kZeroSnap) v = 0.0;
      }
      at(i, col) = 0.0;
    }
    basis_[row] = col;
  }

  Status iterate(bool allow_artificial) {
    for (;;) {
      if (iterations_ >= cap_) {
        throw NumericalError("simplex exceeded iteration cap of " + std::to_string(cap_));
      }
      // Bland: lowest-index improving column.
      std::size_t enter = npos;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!allow_artificial && kinds_[j] == ColumnKind::Artificial) continue;
        if (reduced(j) < -kOptimalityTolerance) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return Status::Optimal;
      std::size_t leave = npos;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = at(i, enter);
        if (a <= options_.pivot_tolerance) continue;
        const double ratio = std::max(0.0, rhs(i)) / a;
        if (leave == npos) {
          best = ratio;
          leave = i;
          continue;
        }
        const double slack = 1e-12 * std::max(1.0, std::abs(best));
        if (ratio < best - slack || (ratio <= best + slack && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == npos) return Status::Unbounded;
      pivot(leave, enter);
      ++iterations_;
    }
  }

  void drive_out_artificials() {
    std::vector<std::size_t> redundant;
    for (std::size_t i = 0; i < m_; ++i) {
      if (kinds_[basis_[i]] != ColumnKind::Artificial) continue;
      std::size_t col = npos;
      double best = options_.pivot_tolerance;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (kinds_[j] == ColumnKind::Artificial) continue;
        if (std::abs(at(i, j)) > best) {
          best = std::abs(at(i, j));
          col = j;
        }
      }
      if (col == npos) {
        redundant.push_back(i);
      } else {
        pivot(i, col);
      }
    }
    // Redundant rows keep an artificial basic at level ~0; zero them so they
    // never constrain phase 2.
    for (std::size_t i : redundant) {
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) = 0.0;
      basis_[i] = npos;
    }
  }

  SimplexOptions options_;
  std::size_t m_ = 0;
  std::size_t cols_ = 0;
  std::size_t width_ = 0;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
  std::vector<ColumnKind> kinds_;
  std::vector<std::size_t> pos_col_, neg_col_;
  std::vector<double> cost_;
  std::size_t iterations_ = 0;
  std::size_t cap_ = 0;
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const SimplexOptions& options) {
  Tableau tableau(lp, options);
  return tableau.run(lp);
}

bool feasible(const LinearProgram& lp, const SimplexOptions& options) {
  LinearProgram zero = lp;
  zero.set_objective(std::vector<double>(lp.num_variables(), 0.0));
  return solve(zero, options).status == Status::Optimal;
}

}  // namespace sonc::lp
