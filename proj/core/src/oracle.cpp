#include "sonc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

namespace sonc {

namespace {

// NaN (inf - inf far outside the box) never wins the comparison.
double safe_eval(const ExponentialSum& f, std::span<const double> x) {
  const double v = evaluate(f, x);
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> x;
};

// Scans every grid point whose first coordinate index lies in [lo, hi).
Best scan_slab(const ExponentialSum& f, const std::vector<double>& axis, std::size_t lo,
               std::size_t hi) {
  const std::size_t n = f.dim();
  const std::size_t g = axis.size();
  Best best;
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  for (std::size_t first = lo; first < hi; ++first) {
    idx.assign(n, 0);
    idx[0] = first;
    for (;;) {
      for (std::size_t i = 0; i < n; ++i) x[i] = axis[idx[i]];
      const double v = safe_eval(f, x);
      if (v < best.value) {
        best.value = v;
        best.x = x;
      }
      std::size_t k = 1;
      while (k < n && ++idx[k] == g) idx[k++] = 0;
      if (k >= n) break;
    }
  }
  return best;
}

}  // namespace

OracleResult sample_min(const ExponentialSum& f, const OracleConfig& cfg) {
  if (cfg.grid_points_per_axis < 3) throw OracleBudgetError("need at least 3 grid points");
  if (!(cfg.box_radius > 0.0)) throw OracleBudgetError("box radius must be positive");
  const std::size_t n = f.dim();
  const std::size_t g = cfg.grid_points_per_axis;
  double total = 1.0;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(g);
  if (total > static_cast<double>(cfg.max_grid_evaluations)) {
    throw OracleBudgetError("grid of " + std::to_string(g) + "^" + std::to_string(n) +
                            " points exceeds the evaluation budget");
  }

  std::vector<double> axis(g);
  const double h = 2.0 * cfg.box_radius / static_cast<double>(g - 1);
  for (std::size_t i = 0; i < g; ++i) axis[i] = -cfg.box_radius + h * static_cast<double>(i);

  std::size_t threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, g);
  std::vector<std::future<Best>> parts;
  const std::size_t chunk = (g + threads - 1) / threads;
  for (std::size_t lo = 0; lo < g; lo += chunk) {
    const std::size_t hi = std::min(g, lo + chunk);
    parts.push_back(std::async(std::launch::async, scan_slab, std::cref(f), std::cref(axis),
                               lo, hi));
  }
  // Slabs are merged in order so ties resolve identically for any thread count.
  Best best;
  for (auto& p : parts) {
    auto b = p.get();
    if (b.value < best.value) best = std::move(b);
  }

  OracleResult out;
  out.grid_value = best.value;
  std::vector<double> x = best.x;
  double fx = best.value;
  double step = h;
  for (std::size_t it = 0; it < cfg.refine_steps; ++it) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (double dir : {-1.0, 1.0}) {
        const double saved = x[i];
        x[i] = saved + dir * step;
        const double v = safe_eval(f, x);
        if (v < fx) {
          fx = v;
          improved = true;
          break;
        }
        x[i] = saved;
      }
    }
    if (!improved) step *= 0.5;
  }
  out.value = fx;
  out.argmin = std::move(x);
  return out;
}

}  // namespace sonc
