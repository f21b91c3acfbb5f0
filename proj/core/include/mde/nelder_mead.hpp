#pragma once

#include <functional>

#include "mde/linalg.hpp"

namespace mde {

struct OptimizerOptions {
  /// Iteration cap per run; 0 means 1000 * dimension.
  int max_iters = 0;
  /// Stop when max f - min f over the simplex falls below this.
  double f_tol = 1e-8;
  /// Initial simplex edge along coordinate i is max(scale, scale * |x0_i|).
  double simplex_scale = 0.1;
  /// Fresh-simplex restarts from the incumbent after the first run.
  int restarts = 1;
  /// Piecewise-constant (sign) distances only: number of continuation stages
  /// on a tanh-smoothed surrogate run before the exact search; 0 disables.
  int smoothing_stages = 8;
};

struct OptimizerDiagnostics {
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  double final_spread = 0.0;
};

struct OptimizerResult {
  Vector argmin;
  double value = 0.0;
  OptimizerDiagnostics diag;
};

/// Derivative-free Nelder-Mead simplex minimization (standard coefficients
/// 1, 2, 1/2, 1/2). The returned point is the best one ever evaluated, so the
/// value never exceeds f(x0).
OptimizerResult nelder_mead(const std::function<double(const Vector&)>& f, const Vector& x0,
                            const OptimizerOptions& opts = {});

}  // namespace mde
