#include "mde/baselines.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "mde/error.hpp"
#include "mde/two_stage.hpp"

namespace mde {

OlsResult ols(const RegressionData& data) {
  data.validate();
  OlsResult out;
  out.betahat = solve_ls(data.x, data.y);
  out.residuals = fitted_residuals(data.y, data.x, out.betahat);
  return out;
}

Vector ar_cls(const ARData& data) {
  data.validate();
  const Matrix z = lag_matrix(data.series, data.order);
  try {
    return solve_ls(z, data.series);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Rank) throw;
    throw Error(ErrorKind::DegenerateSeries,
                fmt::format("lag Gram matrix of the order-{} model is singular ({})", data.order,
                            e.what()));
  }
}

CoStep cochrane_orcutt_step(const RegressionData& data, const Vector& rho) {
  const Eigen::Index q = rho.size();
  const TransformedData t = transform_data(data.y, data.x, rho);
  CoStep step;
  step.betahat = solve_ls(t.x, t.y);
  const Vector resid = fitted_residuals(data.y, data.x, step.betahat);
  if (is_identically_zero(resid)) {
    step.rhohat = Vector::Zero(q);
    step.rho_degenerate = true;
  } else {
    step.rhohat = ar_cls(ARData{resid, static_cast<int>(q)});
  }
  return step;
}

CoResult cochrane_orcutt(const RegressionData& data, int q, const CoOptions& opts) {
  data.validate();
  if (q < 1 || data.n() <= q) {
    throw Error(ErrorKind::Order, fmt::format("Cochrane-Orcutt needs n > q >= 1, got n={} q={}",
                                              data.n(), q));
  }
  if (opts.max_iter < 1 || !(opts.tol >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "Cochrane-Orcutt needs max_iter >= 1 and tol >= 0");
  }

  CoResult out;
  out.rhohat = Vector::Zero(q);
  for (int it = 1; it <= opts.max_iter; ++it) {
    CoStep step;
    try {
      step = cochrane_orcutt_step(data, out.rhohat);
    } catch (const Error& e) {
      throw Error(e.kind(), fmt::format("Cochrane-Orcutt iteration {}: {}", it, e.what()));
    }
    double change = (step.rhohat - out.rhohat).cwiseAbs().maxCoeff();
    if (it == 1) {
      change = std::numeric_limits<double>::infinity();
    } else {
      change = std::max(change, (step.betahat - out.betahat).cwiseAbs().maxCoeff());
    }
    out.betahat = std::move(step.betahat);
    out.rhohat = std::move(step.rhohat);
    out.rho_degenerate = step.rho_degenerate;
    out.iterations = it;
    if (change < opts.tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace mde
