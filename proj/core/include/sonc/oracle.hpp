#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sonc/support.hpp"

namespace sonc {

/// Brute-force search box and budget. Coordinates are the exponential ones,
/// so polynomials are probed on the positive orthant only.
struct OracleConfig {
  std::size_t grid_points_per_axis = 101;
  double box_radius = 5.0;
  std::size_t refine_steps = 200;
  /// Upper limit on grid_points_per_axis^n.
  std::size_t max_grid_evaluations = 110'000'000;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

class OracleBudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleResult {
  double value = 0.0;  // an upper bound on inf f
  std::vector<double> argmin;
  double grid_value = 0.0;  // best value before refinement
};

/// Grid minimum over [-R, R]^n followed by coordinate-descent polishing.
/// Throws OracleBudgetError for an invalid config or a grid over budget.
OracleResult sample_min(const ExponentialSum& f, const OracleConfig& cfg = {});

}  // namespace sonc
