#include "mde/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "mde/error.hpp"

namespace mde {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Run {
  Vector best;
  double best_value;
  int iterations;
  int evaluations;
  bool converged;
  double spread;
};

Run run_simplex(const std::function<double(const Vector&)>& f, const Vector& x0, double f0,
                const OptimizerOptions& opts, int max_iters) {
  const Eigen::Index dim = x0.size();
  int evaluations = 0;
  auto eval = [&](const Vector& x) {
    ++evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<Vector> pts(dim + 1, x0);
  std::vector<double> vals(dim + 1, f0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    pts[i + 1](i) += std::max(opts.simplex_scale, opts.simplex_scale * std::abs(x0(i)));
    vals[i + 1] = eval(pts[i + 1]);
  }

  std::vector<std::size_t> order(dim + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    // stable: ties keep the earlier (older) vertex as the better one
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  };

  int iter = 0;
  bool converged = false;
  sort_simplex();
  double spread = vals[order.back()] - vals[order.front()];
  while (iter < max_iters) {
    if (spread < opts.f_tol) {
      converged = true;
      break;
    }
    ++iter;
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];
    const std::size_t best = order.front();

    Vector centroid = Vector::Zero(dim);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) centroid += pts[order[k]];
    centroid /= static_cast<double>(dim);

    const Vector xr = centroid + kReflect * (centroid - pts[worst]);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const Vector xe = centroid + kExpand * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      bool accepted = false;
      if (fr < vals[worst]) {
        const Vector xc = centroid + kContract * (xr - centroid);
        const double fc = eval(xc);
        if (fc <= fr) {
          pts[worst] = xc;
          vals[worst] = fc;
          accepted = true;
        }
      } else {
        const Vector xc = centroid + kContract * (pts[worst] - centroid);
        const double fc = eval(xc);
        if (fc < vals[worst]) {
          pts[worst] = xc;
          vals[worst] = fc;
          accepted = true;
        }
      }
      if (!accepted) {
        for (std::size_t k = 1; k < order.size(); ++k) {
          const std::size_t idx = order[k];
          pts[idx] = pts[best] + kShrink * (pts[idx] - pts[best]);
          vals[idx] = eval(pts[idx]);
        }
      }
    }
    sort_simplex();
    spread = vals[order.back()] - vals[order.front()];
  }
  if (!converged && spread < opts.f_tol) converged = true;

  return Run{pts[order.front()], vals[order.front()], iter, evaluations, converged, spread};
}

}  // namespace

OptimizerResult nelder_mead(const std::function<double(const Vector&)>& f, const Vector& x0,
                            const OptimizerOptions& opts) {
  if (x0.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty starting point");
  if (!(opts.f_tol >= 0.0) || !(opts.simplex_scale > 0.0) || opts.restarts < 0 ||
      opts.max_iters < 0) {
    throw Error(ErrorKind::InvalidArgument, "invalid optimizer options");
  }
  const int max_iters =
      opts.max_iters > 0 ? opts.max_iters : 1000 * static_cast<int>(x0.size());

  OptimizerResult result;
  result.argmin = x0;
  result.value = f(x0);
  if (std::isnan(result.value)) result.value = std::numeric_limits<double>::infinity();
  result.diag.evaluations = 1;

  for (int run = 0; run <= opts.restarts; ++run) {
    Run r = run_simplex(f, result.argmin, result.value, opts, max_iters);
    result.diag.iterations += r.iterations;
    result.diag.evaluations += r.evaluations;
    result.diag.converged = r.converged;
    result.diag.final_spread = r.spread;
    if (r.best_value < result.value) {
      result.argmin = std::move(r.best);
      result.value = r.best_value;
    }
  }
  return result;
}

}  // namespace mde
