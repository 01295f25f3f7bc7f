#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace sonc::lp {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Bound { Free, NonNegative };
enum class Status { Optimal, Infeasible, Unbounded };

std::string_view to_string(Status status);

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

/// Dense LP: optimize objective^T x subject to rows, with each variable
/// either free or nonnegative.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_variables, Sense sense = Sense::Minimize);

  std::size_t num_variables() const { return bounds_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  Sense sense() const { return sense_; }

  void set_sense(Sense sense) { sense_ = sense; }
  void set_objective(std::vector<double> coefficients);
  void set_objective_coefficient(std::size_t var, double value);
  void set_bound(std::size_t var, Bound bound);

  /// Throws std::invalid_argument on length mismatch or a non-finite rhs.
  void add_constraint(std::vector<double> coefficients, Relation relation, double rhs);

  const std::vector<double>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  Bound bound(std::size_t var) const { return bounds_[var]; }

  /// max_i violation of row i at x (0 when every row holds).
  double max_violation(const std::vector<double>& x) const;

 private:
  Sense sense_;
  std::vector<double> objective_;
  std::vector<Bound> bounds_;
  std::vector<Constraint> constraints_;
};

struct LpSolution {
  Status status = Status::Infeasible;
  std::vector<double> point;  // empty unless Optimal
  double objective_value = 0.0;
  std::size_t iterations = 0;
};

/// Pivoting exceeded the iteration cap.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimplexOptions {
  double pivot_tolerance = 1e-10;
  double feasibility_tolerance = 1e-8;
  /// Cap is factor * (rows + columns) of the standard-form tableau.
  std::size_t iteration_factor = 50;
};

/// Two-phase dense primal simplex with Bland's rule.
LpSolution solve(const LinearProgram& lp, const SimplexOptions& options = {});

/// True iff the constraint set is nonempty.
bool feasible(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace sonc::lp
