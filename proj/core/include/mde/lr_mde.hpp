#pragma once

#include <optional>

#include "mde/linalg.hpp"
#include "mde/measures.hpp"
#include "mde/nelder_mead.hpp"

namespace mde {

/// Response y (n) and design x (n x p) of the model y_i = x_i' beta + e_i.
struct RegressionData {
  Vector y;
  Matrix x;

  Eigen::Index n() const noexcept { return x.rows(); }
  Eigen::Index p() const noexcept { return x.cols(); }

  /// Throws Error(Shape) unless n >= p >= 1 and sizes agree;
  /// Error(InvalidArgument) on non-finite values.
  void validate() const;
};

/// The d_ik weights: either explicit (same shape as X) or the default X (X'X)^{-1/2}.
class WeightMatrix {
 public:
  static WeightMatrix default_weights() { return WeightMatrix(); }
  static WeightMatrix explicit_weights(Matrix d) { return WeightMatrix(std::move(d)); }

  bool is_default() const noexcept { return !d_.has_value(); }
  const Matrix& explicit_matrix() const { return *d_; }

  /// The concrete n x p matrix for design x.
  Matrix resolve(const Matrix& x) const;

 private:
  WeightMatrix() = default;
  explicit WeightMatrix(Matrix d) : d_(std::move(d)) {}

  std::optional<Matrix> d_;
};

struct LrEstimate {
  Vector betahat;
  Vector residuals;
  double objective_at_min = 0.0;
  OptimizerDiagnostics optimizer_diag;
};

int sgn(double x) noexcept;

/// Residuals below this multiple of |y_i| + sum_k |x_ik b_k| are rounding
/// noise and are stored as exact zeros (they carry no sign information).
inline constexpr double kZeroResidualRelTol = 1e-12;

/// y - x b, with rounding-level entries set to exactly 0.
Vector fitted_residuals(const Vector& y, const Matrix& x, const Vector& b);

/// X (X'X)^{-1/2}. Throws Error(Rank) if X is not of full column rank.
Matrix default_weights(const Matrix& x);

/// sum_k [ sum_i d_ik sgn(e_i) ]^2, the distance under the point mass at 0.
double objective_degenerate(const Vector& b, const RegressionData& data, const Matrix& d);

/// Double-sum dual form of the distance for a continuous measure H:
/// sum_k sum_i sum_j d_ik d_jk ( |H(e_i) - H(-e_j)| - |H(e_i) - H(e_j)| ).
double objective_continuous(const Vector& b, const RegressionData& data, const Matrix& d,
                            const IntegratingMeasure& m);

/// The defining integral sum_k \int [ sum_i d_ik {I(e_i <= y) - I(-e_i < y)} ]^2 dH(y),
/// evaluated exactly: the integrand is piecewise constant between the
/// breakpoints {+-e_i} and vanishes on both unbounded tails.
double primal_objective_exact(const Vector& b, const RegressionData& data, const Matrix& d,
                              const IntegratingMeasure& m);

/// Dispatches to the degenerate or continuous form.
double lr_objective(const Vector& b, const RegressionData& data, const Matrix& d,
                    const IntegratingMeasure& m);

/// Reusable evaluator of the distance for fixed (data, d, m). For continuous
/// measures the Gram matrix D D' is cached so each call costs O(n^2).
class DistanceObjective {
 public:
  DistanceObjective(const RegressionData& data, const Matrix& d, const IntegratingMeasure& m);

  double operator()(const Vector& b) const;

  /// Degenerate measure only: the sign distance with sgn(e) replaced by
  /// tanh(e / tau). Tends to operator() as tau -> 0 away from zero residuals.
  double smoothed(const Vector& b, double tau) const;

  bool piecewise_constant() const noexcept { return measure_.is_degenerate(); }

  Vector residuals(const Vector& b) const;

  const Matrix& weights() const noexcept { return d_; }

 private:
  RegressionData data_;
  Matrix d_;
  IntegratingMeasure measure_;
  Matrix gram_;  // D D', continuous measures only
};

/// Minimizes a distance from b0 with Nelder-Mead. For the piecewise-constant
/// sign distance, a continuation on the tanh-smoothed surrogate (tau shrinking
/// geometrically from the residual scale at b0) supplies a second start, and
/// the lower exact distance wins.
OptimizerResult minimize_distance(const DistanceObjective& objective, const Vector& b0,
                                  const OptimizerOptions& opts);

/// Minimum distance estimate of beta, started from the least-squares fit.
LrEstimate koul_lr_mde(const RegressionData& data, const WeightMatrix& w,
                       const IntegratingMeasure& m, const OptimizerOptions& opts = {});

}  // namespace mde
