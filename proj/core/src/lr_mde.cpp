#include "mde/lr_mde.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "mde/error.hpp"

namespace mde {

namespace {

void check_shapes(const Vector& b, const RegressionData& data, const Matrix& d) {
  if (data.y.size() != data.x.rows()) {
    throw Error(ErrorKind::Shape, fmt::format("response has {} entries but design has {} rows",
                                              data.y.size(), data.x.rows()));
  }
  if (b.size() != data.x.cols()) {
    throw Error(ErrorKind::Shape, fmt::format("coefficient vector has {} entries, expected {}",
                                              b.size(), data.x.cols()));
  }
  if (d.rows() != data.x.rows() || d.cols() != data.x.cols()) {
    throw Error(ErrorKind::Shape, fmt::format("weight matrix is {}x{} but design is {}x{}",
                                              d.rows(), d.cols(), data.x.rows(), data.x.cols()));
  }
}

void require_valid_continuous(const IntegratingMeasure& m) {
  if (!m.is_continuous()) {
    throw Error(ErrorKind::InvalidVariant,
                "the continuous distance form needs a continuous measure");
  }
}

void require_valid_measure(const IntegratingMeasure& m) {
  const auto violations = validate_measure(m);
  if (violations.empty()) return;
  std::string what;
  for (auto v : violations) {
    if (!what.empty()) what += ", ";
    what += to_string(v);
  }
  throw Error(ErrorKind::InvalidArgument, "measure '" + m.name() + "' is invalid: " + what);
}

// H(e_i) and H(-e_i) for every residual.
void eval_h_pairs(const IntegratingMeasure& m, const Vector& e, Vector& h_pos, Vector& h_neg) {
  h_pos.resize(e.size());
  h_neg.resize(e.size());
  if (m.is_lebesgue()) {
    h_pos = e;
    h_neg = -e;
    return;
  }
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    h_pos(i) = m.eval(e(i));
    h_neg(i) = m.eval(-e(i));
  }
}

double dual_form(const Matrix& gram, const Vector& h_pos, const Vector& h_neg) {
  const Eigen::Index n = h_pos.size();
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double hi = h_pos(i);
    const double* g = gram.col(i).data();  // symmetric: column i == row i
    double row = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      row += g[j] * (std::abs(hi - h_neg(j)) - std::abs(hi - h_pos(j)));
    }
    total += row;
  }
  return total;
}

double sign_form(const Matrix& d, const Vector& e) {
  Vector s(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) s(i) = sgn(e(i));
  return (d.transpose() * s).squaredNorm();
}

}  // namespace

void RegressionData::validate() const {
  if (x.cols() < 1 || x.rows() < x.cols()) {
    throw Error(ErrorKind::Shape,
                fmt::format("regression needs n >= p >= 1, got n={} p={}", x.rows(), x.cols()));
  }
  if (y.size() != x.rows()) {
    throw Error(ErrorKind::Shape, fmt::format("response has {} entries but design has {} rows",
                                              y.size(), x.rows()));
  }
  if (!y.allFinite() || !x.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "regression data contains non-finite values");
  }
}

Matrix WeightMatrix::resolve(const Matrix& x) const {
  if (!d_) return mde::default_weights(x);
  if (d_->rows() != x.rows() || d_->cols() != x.cols()) {
    throw Error(ErrorKind::Shape, fmt::format("dimension of D ({}x{}) should match that of X ({}x{})",
                                              d_->rows(), d_->cols(), x.rows(), x.cols()));
  }
  return *d_;
}

int sgn(double x) noexcept { return (x > 0.0) - (x < 0.0); }

Vector fitted_residuals(const Vector& y, const Matrix& x, const Vector& b) {
  Vector e = y - x * b;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    const double scale = std::abs(y(i)) + (x.row(i).transpose().cwiseProduct(b)).cwiseAbs().sum();
    if (std::abs(e(i)) <= kZeroResidualRelTol * scale) e(i) = 0.0;
  }
  return e;
}

Matrix default_weights(const Matrix& x) {
  return x * inv_sqrt_sym(x.transpose() * x);
}

DistanceObjective::DistanceObjective(const RegressionData& data, const Matrix& d,
                                     const IntegratingMeasure& m)
    : data_(data), d_(d), measure_(m) {
  check_shapes(Vector::Zero(data.x.cols()), data, d);
  if (measure_.is_continuous()) {
    gram_ = d_ * d_.transpose();
    gram_.triangularView<Eigen::StrictlyLower>() = gram_.transpose();
  }
}

double DistanceObjective::operator()(const Vector& b) const {
  if (b.size() != data_.x.cols()) {
    throw Error(ErrorKind::Shape, fmt::format("coefficient vector has {} entries, expected {}",
                                              b.size(), data_.x.cols()));
  }
  const Vector e = fitted_residuals(data_.y, data_.x, b);
  if (measure_.is_degenerate()) return sign_form(d_, e);
  Vector h_pos, h_neg;
  eval_h_pairs(measure_, e, h_pos, h_neg);
  return dual_form(gram_, h_pos, h_neg);
}

Vector DistanceObjective::residuals(const Vector& b) const {
  if (b.size() != data_.x.cols()) {
    throw Error(ErrorKind::Shape, fmt::format("coefficient vector has {} entries, expected {}",
                                              b.size(), data_.x.cols()));
  }
  return fitted_residuals(data_.y, data_.x, b);
}

double DistanceObjective::smoothed(const Vector& b, double tau) const {
  if (!measure_.is_degenerate()) {
    throw Error(ErrorKind::InvalidVariant, "smoothing applies to the degenerate measure only");
  }
  const Vector e = residuals(b);
  const Vector s = (e.array() / tau).tanh().matrix();
  return (d_.transpose() * s).squaredNorm();
}

OptimizerResult minimize_distance(const DistanceObjective& objective, const Vector& b0,
                                  const OptimizerOptions& opts) {
  const auto exact = [&](const Vector& b) { return objective(b); };
  OptimizerResult direct = nelder_mead(exact, b0, opts);
  if (!objective.piecewise_constant() || opts.smoothing_stages <= 0) return direct;

  Vector abs_e = objective.residuals(b0).cwiseAbs();
  std::nth_element(abs_e.begin(), abs_e.begin() + abs_e.size() / 2, abs_e.end());
  double tau = abs_e(abs_e.size() / 2);
  if (!(tau > 0.0)) return direct;

  constexpr double kTauShrink = 0.2;
  OptimizerDiagnostics total = direct.diag;
  Vector point = b0;
  for (int stage = 0; stage < opts.smoothing_stages; ++stage, tau *= kTauShrink) {
    OptimizerResult r = nelder_mead(
        [&](const Vector& b) { return objective.smoothed(b, tau); }, point, opts);
    total.iterations += r.diag.iterations;
    total.evaluations += r.diag.evaluations;
    point = std::move(r.argmin);
  }
  OptimizerResult polished = nelder_mead(exact, point, opts);
  total.iterations += polished.diag.iterations;
  total.evaluations += polished.diag.evaluations;

  OptimizerResult& best = polished.value < direct.value ? polished : direct;
  total.converged = best.diag.converged;
  total.final_spread = best.diag.final_spread;
  best.diag = total;
  return std::move(best);
}

double objective_degenerate(const Vector& b, const RegressionData& data, const Matrix& d) {
  check_shapes(b, data, d);
  return sign_form(d, fitted_residuals(data.y, data.x, b));
}

double objective_continuous(const Vector& b, const RegressionData& data, const Matrix& d,
                            const IntegratingMeasure& m) {
  require_valid_continuous(m);
  check_shapes(b, data, d);
  return DistanceObjective(data, d, m)(b);
}

double primal_objective_exact(const Vector& b, const RegressionData& data, const Matrix& d,
                              const IntegratingMeasure& m) {
  require_valid_continuous(m);
  check_shapes(b, data, d);
  const Vector e = fitted_residuals(data.y, data.x, b);
  const Eigen::Index n = e.size();
  const Eigen::Index p = d.cols();

  std::vector<double> breaks;
  breaks.reserve(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    breaks.push_back(e(i));
    breaks.push_back(-e(i));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  double total = 0.0;
  for (std::size_t m_idx = 0; m_idx + 1 < breaks.size(); ++m_idx) {
    const double lo = breaks[m_idx];
    const double hi = breaks[m_idx + 1];
    const double y = 0.5 * (lo + hi);
    const double mass = m.eval(hi) - m.eval(lo);
    for (Eigen::Index k = 0; k < p; ++k) {
      double inner = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double bracket = (e(i) <= y ? 1.0 : 0.0) - (-e(i) < y ? 1.0 : 0.0);
        inner += d(i, k) * bracket;
      }
      total += inner * inner * mass;
    }
  }
  return total;
}

double lr_objective(const Vector& b, const RegressionData& data, const Matrix& d,
                    const IntegratingMeasure& m) {
  return m.is_degenerate() ? objective_degenerate(b, data, d) : objective_continuous(b, data, d, m);
}

LrEstimate koul_lr_mde(const RegressionData& data, const WeightMatrix& w,
                       const IntegratingMeasure& m, const OptimizerOptions& opts) {
  data.validate();
  require_valid_measure(m);
  const Matrix d = w.resolve(data.x);
  const Vector b0 = solve_ls(data.x, data.y);

  const DistanceObjective objective(data, d, m);
  OptimizerResult opt = minimize_distance(objective, b0, opts);

  LrEstimate est;
  est.residuals = fitted_residuals(data.y, data.x, opt.argmin);
  est.betahat = std::move(opt.argmin);
  // the dual form can dip below zero by rounding only
  est.objective_at_min = std::max(0.0, opt.value);
  est.optimizer_diag = opt.diag;
  return est;
}

}  // namespace mde
