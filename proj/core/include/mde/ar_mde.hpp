#pragma once

#include "mde/linalg.hpp"
#include "mde/lr_mde.hpp"
#include "mde/measures.hpp"
#include "mde/nelder_mead.hpp"

namespace mde {

/// Observed series X_1..X_n of an AR(q) process X_i = Z_i' rho + xi_i.
struct ARData {
  Vector series;
  int order = 1;

  Eigen::Index n() const noexcept { return series.size(); }

  /// Throws Error(Order) unless n > q >= 1; Error(InvalidArgument) on
  /// non-finite values.
  void validate() const;
};

struct ArEstimate {
  Vector rhohat;
  Vector residuals;
  double objective_at_min = 0.0;
  OptimizerDiagnostics optimizer_diag;
};

/// n x q matrix whose row i is (X_{i-1}, ..., X_{i-q}); presample values are 0.
Matrix lag_matrix(const Vector& series, int q);

/// Weights d_ik = X_{i-k} / sqrt(n), i.e. g(x) = x with the 1/sqrt(n) factor.
Matrix ar_weights(const Vector& series, int q);

/// The regression view of the AR model: response = series, design = lag matrix.
RegressionData ar_regression_view(const ARData& data);

/// The autoregressive distance M(r), evaluated through the regression distance
/// with y := series, X := lag_matrix and D := lag_matrix / sqrt(n).
double ar_objective(const Vector& r, const ARData& data, const IntegratingMeasure& m);

/// Minimum distance estimate of rho, started from conditional least squares.
/// Throws Error(DegenerateSeries) if the lag Gram matrix is singular.
ArEstimate koul_ar_mde(const ARData& data, const IntegratingMeasure& m,
                       const OptimizerOptions& opts = {});

}  // namespace mde
