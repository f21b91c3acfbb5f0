#pragma once

#include <Eigen/Dense>

namespace mde {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kDefaultInvSqrtTol = 1e-12;

/// Unique symmetric positive-definite inverse square root M^{-1/2},
/// computed from the spectral decomposition M = V diag(lambda) V'.
///
/// Requires M square, symmetric within tol (relative to max |M_ij|), and
/// min eigenvalue > tol * max eigenvalue. Throws Error(Shape) or Error(Rank).
Matrix inv_sqrt_sym(const Matrix& m, double tol = kDefaultInvSqrtTol);

/// argmin_b ||y - X b||^2 via column-pivoted Householder QR.
/// Throws Error(Shape) for n < p or mismatched sizes, Error(Rank) if X is
/// numerically rank deficient.
Vector solve_ls(const Matrix& x, const Vector& y);

}  // namespace mde
