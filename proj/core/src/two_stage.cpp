#include "mde/two_stage.hpp"

#include <fmt/format.h>

#include "mde/error.hpp"

namespace mde {

namespace {

void estimate_rho(StageEstimates& stage, int q, const IntegratingMeasure& m,
                  const OptimizerOptions& opts) {
  if (is_identically_zero(stage.residuals)) {
    stage.rhohat = Vector::Zero(q);
    stage.rho_degenerate = true;
    return;
  }
  ArEstimate ar = koul_ar_mde(ARData{stage.residuals, q}, m, opts);
  stage.rhohat = std::move(ar.rhohat);
  stage.ar_diag = ar.optimizer_diag;
}

}  // namespace

bool is_identically_zero(const Vector& v) noexcept {
  return (v.array() == 0.0).all();
}

TransformedData transform_data(const Vector& y, const Matrix& x, const Vector& rho) {
  const Eigen::Index n = y.size();
  const Eigen::Index q = rho.size();
  if (x.rows() != n) {
    throw Error(ErrorKind::Shape,
                fmt::format("response has {} entries but design has {} rows", n, x.rows()));
  }
  if (q < 1 || n <= q) {
    throw Error(ErrorKind::Order, fmt::format("transform needs n > q >= 1, got n={} q={}", n, q));
  }
  TransformedData out{y.tail(n - q), x.bottomRows(n - q)};
  for (Eigen::Index i = 0; i < n - q; ++i) {
    for (Eigen::Index j = 1; j <= q; ++j) {
      out.y(i) -= rho(j - 1) * y(i + q - j);
      out.x.row(i) -= rho(j - 1) * x.row(i + q - j);
    }
  }
  return out;
}

TwoStageResult koul_2stage_mde(const RegressionData& data, const WeightMatrix& w,
                               const IntegratingMeasure& reg_measure, int q,
                               const IntegratingMeasure& ar_measure,
                               const OptimizerOptions& opts) {
  data.validate();
  if (q < 1 || data.n() <= q) {
    throw Error(ErrorKind::Order,
                fmt::format("two-stage estimation needs n > q >= 1, got n={} q={}", data.n(), q));
  }
  TwoStageResult out;

  LrEstimate lr1 = koul_lr_mde(data, w, reg_measure, opts);
  out.stage1.betahat = std::move(lr1.betahat);
  out.stage1.residuals = std::move(lr1.residuals);
  out.stage1.lr_diag = lr1.optimizer_diag;
  estimate_rho(out.stage1, q, ar_measure, opts);

  TransformedData t = transform_data(data.y, data.x, out.stage1.rhohat);
  const WeightMatrix w2 = w.is_default()
                              ? WeightMatrix::default_weights()
                              : WeightMatrix::explicit_weights(
                                    w.explicit_matrix().bottomRows(data.n() - q));
  LrEstimate lr2 = koul_lr_mde(RegressionData{std::move(t.y), std::move(t.x)}, w2, reg_measure,
                               opts);
  out.stage2.betahat = std::move(lr2.betahat);
  out.stage2.residuals = fitted_residuals(data.y, data.x, out.stage2.betahat);
  out.stage2.lr_diag = lr2.optimizer_diag;
  estimate_rho(out.stage2, q, ar_measure, opts);
  return out;
}

}  // namespace mde
