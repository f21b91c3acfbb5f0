#pragma once

#include "mde/ar_mde.hpp"
#include "mde/distributions.hpp"
#include "mde/lr_mde.hpp"

namespace mde {

inline constexpr double kCovariateUpper = 50.0;

/// X_i = sum_j rho_j X_{i-j} + innovations_i with zero initial conditions.
Vector ar_recursion(const Vector& innovations, const Vector& rho);

/// X ~ iid Uniform(0, 50), y = X beta + errors.
RegressionData gen_lr(Eigen::Index n, const Vector& beta, const ErrorDistribution& d,
                      RandomStream& stream);

ARData gen_ar(Eigen::Index n, const Vector& rho, const ErrorDistribution& d,
              RandomStream& stream);

/// Regression with AR(q) errors: errors follow ar_recursion of iid innovations.
RegressionData gen_lr_ar(Eigen::Index n, const Vector& beta, const Vector& rho,
                         const ErrorDistribution& d, RandomStream& stream);

}  // namespace mde
