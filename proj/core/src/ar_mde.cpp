#include "mde/ar_mde.hpp"

#include <cmath>

#include <fmt/format.h>

#include "mde/baselines.hpp"
#include "mde/error.hpp"

namespace mde {

void ARData::validate() const {
  if (order < 1 || series.size() <= order) {
    throw Error(ErrorKind::Order, fmt::format("autoregression needs n > q >= 1, got n={} q={}",
                                              series.size(), order));
  }
  if (!series.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "series contains non-finite values");
  }
}

Matrix lag_matrix(const Vector& series, int q) {
  const Eigen::Index n = series.size();
  if (q < 1 || n <= q) {
    throw Error(ErrorKind::Order,
                fmt::format("lag matrix needs n > q >= 1, got n={} q={}", n, q));
  }
  Matrix z = Matrix::Zero(n, q);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int j = 1; j <= q; ++j) {
      if (i - j >= 0) z(i, j - 1) = series(i - j);
    }
  }
  return z;
}

Matrix ar_weights(const Vector& series, int q) {
  return lag_matrix(series, q) / std::sqrt(static_cast<double>(series.size()));
}

RegressionData ar_regression_view(const ARData& data) {
  return RegressionData{data.series, lag_matrix(data.series, data.order)};
}

double ar_objective(const Vector& r, const ARData& data, const IntegratingMeasure& m) {
  data.validate();
  const RegressionData view = ar_regression_view(data);
  if (r.size() != data.order) {
    throw Error(ErrorKind::Shape,
                fmt::format("rho has {} entries, expected {}", r.size(), data.order));
  }
  return lr_objective(r, view, ar_weights(data.series, data.order), m);
}

ArEstimate koul_ar_mde(const ARData& data, const IntegratingMeasure& m,
                       const OptimizerOptions& opts) {
  data.validate();
  if (const auto bad = validate_measure(m); !bad.empty()) {
    throw Error(ErrorKind::InvalidArgument, "measure '" + m.name() + "' is invalid");
  }
  const RegressionData view = ar_regression_view(data);
  const Vector r0 = ar_cls(data);

  const DistanceObjective objective(view, ar_weights(data.series, data.order), m);
  OptimizerResult opt = minimize_distance(objective, r0, opts);

  ArEstimate est;
  est.residuals = fitted_residuals(view.y, view.x, opt.argmin);
  est.rhohat = std::move(opt.argmin);
  est.objective_at_min = std::max(0.0, opt.value);
  est.optimizer_diag = opt.diag;
  return est;
}

}  // namespace mde
