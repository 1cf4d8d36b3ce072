#include "polity/linalg.hpp"

#include <Eigen/LU>
#include <limits>

#include "polity/error.hpp"

namespace polity {

namespace {

Eigen::FullPivLU<Matrix> lu_with_threshold(const Matrix& m, double rel_tol) {
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(rel_tol);
  return lu;
}

}  // namespace

int matrix_rank(const Matrix& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(lu_with_threshold(m, rel_tol).rank());
}

Matrix right_kernel(const Matrix& m, double rel_tol) {
  auto lu = lu_with_threshold(m, rel_tol);
  if (lu.dimensionOfKernel() == 0) return Matrix(m.cols(), 0);
  return lu.kernel();
}

Matrix left_kernel(const Matrix& m, double rel_tol) {
  return right_kernel(m.transpose().eval(), rel_tol).transpose();
}

RowVector stationary_row(const Matrix& t, double rel_tol) {
  const auto n = t.rows();
  Matrix shifted = Matrix::Identity(n, n) - t;
  Matrix kernel = left_kernel(shifted, rel_tol);
  if (kernel.rows() != 1) {
    throw Error(ErrorCode::NumericFailure,
                "stationary vector is not unique (kernel dimension " + std::to_string(kernel.rows()) + ")");
  }
  RowVector pi = kernel.row(0);
  double total = pi.sum();
  if (total == 0.0) throw Error(ErrorCode::NumericFailure, "stationary vector sums to zero");
  pi /= total;
  return pi;
}

double condition_estimate(const Matrix& m) {
  Eigen::FullPivLU<Matrix> lu(m);
  double rc = lu.rcond();
  if (rc <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / rc;
}

}  // namespace polity
