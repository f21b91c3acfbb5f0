#pragma once

#include "mde/ar_mde.hpp"
#include "mde/lr_mde.hpp"
#include "mde/measures.hpp"
#include "mde/nelder_mead.hpp"

namespace mde {

/// Quasi-differenced data of length n - q:
///   y~_i = y_{i+q} - sum_j rho_j y_{i+q-j},  x~_i = x_{i+q} - sum_j rho_j x_{i+q-j}.
struct TransformedData {
  Vector y;
  Matrix x;
};

TransformedData transform_data(const Vector& y, const Matrix& x, const Vector& rho);

struct StageEstimates {
  Vector betahat;
  Vector residuals;  // y - X betahat on the original model, length n
  Vector rhohat;
  /// The residual series was identically zero; rhohat was set to 0.
  bool rho_degenerate = false;
  OptimizerDiagnostics lr_diag;
  OptimizerDiagnostics ar_diag;
};

struct TwoStageResult {
  StageEstimates stage1;
  StageEstimates stage2;
};

/// Stage 1: beta by koul_lr_mde on (y, X), rho by koul_ar_mde on its residuals.
/// Stage 2: beta by koul_lr_mde on the data quasi-differenced with the stage-1
/// rho, then rho again from the original-model residuals of that beta.
///
/// Under default weights stage 2 recomputes X~ (X~'X~)^{-1/2}; explicit
/// weights are truncated to their last n - q rows.
TwoStageResult koul_2stage_mde(const RegressionData& data, const WeightMatrix& w,
                               const IntegratingMeasure& reg_measure, int q,
                               const IntegratingMeasure& ar_measure,
                               const OptimizerOptions& opts = {});

bool is_identically_zero(const Vector& v) noexcept;

}  // namespace mde
