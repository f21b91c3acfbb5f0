#include "mde/linalg.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "mde/error.hpp"

namespace mde {

Matrix inv_sqrt_sym(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::Shape,
                fmt::format("inverse square root needs a non-empty square matrix, got {}x{}",
                            m.rows(), m.cols()));
  }
  if (!m.allFinite()) throw Error(ErrorKind::InvalidArgument, "matrix has non-finite entries");

  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * std::max(scale, 1.0)) {
    throw Error(ErrorKind::Shape, fmt::format("matrix is not symmetric (max |M - M'| = {})", asym));
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorKind::Rank, "symmetric eigendecomposition failed");
  }
  const Vector& lambda = eig.eigenvalues();  // ascending
  const double lmax = lambda(lambda.size() - 1);
  const double lmin = lambda(0);
  if (!(lmax > 0.0) || !(lmin > tol * lmax)) {
    throw Error(ErrorKind::Rank,
                fmt::format("matrix is not positive definite: smallest eigenvalue {} vs "
                            "largest {} (relative tolerance {})",
                            lmin, lmax, tol));
  }

  const Matrix& v = eig.eigenvectors();
  const Vector inv_root = lambda.cwiseSqrt().cwiseInverse();
  Matrix a = v * inv_root.asDiagonal() * v.transpose();
  return 0.5 * (a + a.transpose());
}

Vector solve_ls(const Matrix& x, const Vector& y) {
  if (x.rows() != y.size()) {
    throw Error(ErrorKind::Shape,
                fmt::format("design has {} rows but response has {} entries", x.rows(), y.size()));
  }
  if (x.cols() == 0 || x.rows() < x.cols()) {
    throw Error(ErrorKind::Shape,
                fmt::format("least squares needs n >= p >= 1, got {}x{}", x.rows(), x.cols()));
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(x);
  if (qr.rank() < x.cols()) {
    throw Error(ErrorKind::Rank, fmt::format("design matrix has rank {} < {} columns", qr.rank(),
                                             x.cols()));
  }
  return qr.solve(y);
}

}  // namespace mde
