#include "mde/generators.hpp"

#include <fmt/format.h>

#include "mde/error.hpp"

namespace mde {

namespace {

Matrix uniform_design(Eigen::Index n, Eigen::Index p, RandomStream& stream) {
  Matrix x(n, p);
  // column-major fill, like matrix(runif(n * p), nrow = n)
  for (Eigen::Index k = 0; k < p; ++k)
    for (Eigen::Index i = 0; i < n; ++i) x(i, k) = kCovariateUpper * stream.uniform_open();
  return x;
}

void check_dims(Eigen::Index n, Eigen::Index p) {
  if (n < 1 || p < 1 || n < p) {
    throw Error(ErrorKind::Shape, fmt::format("generator needs n >= p >= 1, got n={} p={}", n, p));
  }
}

}  // namespace

Vector ar_recursion(const Vector& innovations, const Vector& rho) {
  const Eigen::Index n = innovations.size();
  Vector x = Vector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = 0.0;
    for (Eigen::Index j = 1; j <= rho.size(); ++j) {
      if (i - j >= 0) v += rho(j - 1) * x(i - j);
    }
    x(i) = v + innovations(i);
  }
  return x;
}

RegressionData gen_lr(Eigen::Index n, const Vector& beta, const ErrorDistribution& d,
                      RandomStream& stream) {
  check_dims(n, beta.size());
  Matrix x = uniform_design(n, beta.size(), stream);
  const Vector eps = sample_errors(d, n, stream);
  Vector y = x * beta + eps;
  return RegressionData{std::move(y), std::move(x)};
}

ARData gen_ar(Eigen::Index n, const Vector& rho, const ErrorDistribution& d,
              RandomStream& stream) {
  if (rho.size() < 1 || n <= rho.size()) {
    throw Error(ErrorKind::Order,
                fmt::format("generator needs n > q >= 1, got n={} q={}", n, rho.size()));
  }
  return ARData{ar_recursion(sample_errors(d, n, stream), rho), static_cast<int>(rho.size())};
}

RegressionData gen_lr_ar(Eigen::Index n, const Vector& beta, const Vector& rho,
                         const ErrorDistribution& d, RandomStream& stream) {
  check_dims(n, beta.size());
  if (rho.size() < 1 || n <= rho.size()) {
    throw Error(ErrorKind::Order,
                fmt::format("generator needs n > q >= 1, got n={} q={}", n, rho.size()));
  }
  Matrix x = uniform_design(n, beta.size(), stream);
  const Vector eps = ar_recursion(sample_errors(d, n, stream), rho);
  Vector y = x * beta + eps;
  return RegressionData{std::move(y), std::move(x)};
}

}  // namespace mde
