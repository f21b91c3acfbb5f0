#pragma once

#include "mde/ar_mde.hpp"
#include "mde/linalg.hpp"
#include "mde/lr_mde.hpp"

namespace mde {

struct OlsResult {
  Vector betahat;
  Vector residuals;
};

/// Ordinary least squares. Throws Error(Rank) for rank-deficient X.
OlsResult ols(const RegressionData& data);

/// Conditional least squares (sum Z_i Z_i')^{-1} (sum Z_i X_i) on the
/// zero-padded lag matrix. Throws Error(DegenerateSeries) when singular.
Vector ar_cls(const ARData& data);

struct CoOptions {
  double tol = 1e-6;
  int max_iter = 50;
};

struct CoResult {
  Vector betahat;
  Vector rhohat;
  int iterations = 0;
  bool converged = false;
  /// Set when a residual series was identically zero and rho was taken as 0.
  bool rho_degenerate = false;
};

/// One Cochrane-Orcutt update from rho: OLS on the quasi-differenced data,
/// then conditional least squares on the original-model residuals.
struct CoStep {
  Vector betahat;
  Vector rhohat;
  bool rho_degenerate = false;
};
CoStep cochrane_orcutt_step(const RegressionData& data, const Vector& rho);

/// Iterated Cochrane-Orcutt for AR(q) errors, rho initialized at 0. Stops
/// when the max change over (beta, rho) drops below tol.
/// Singular steps throw Error naming the iteration.
CoResult cochrane_orcutt(const RegressionData& data, int q, const CoOptions& opts = {});

}  // namespace mde
