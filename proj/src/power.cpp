#include "polity/power.hpp"

#include <Eigen/LU>
#include <cmath>

#include "polity/error.hpp"

namespace polity {

ContractionBound contraction_bound(const PoliticsMatrix& a) {
  double eps_min = a.entries().minCoeff();
  double factor = 1.0 - a.size() * eps_min;
  if (factor < 0.0) factor = 0.0;  // uniform rows hit the bound exactly
  return ContractionBound{eps_min, factor};
}

PowerVector power_iterative(const PoliticsMatrix& a, double tol) {
  if (tol <= 0.0) throw Error(ErrorCode::BadParameters, "tolerance must be positive");
  const int n = a.size();
  const Matrix& m = a.entries();
  RowVector x = RowVector::Constant(n, 1.0 / n);

  // Columns of A^k have value range at most factor^k, and both x A^k and the
  // stationary vector live inside that range, which bounds the iteration
  // count ahead of time (successive iterates differ by at most twice the
  // range, hence the tol/2).
  double factor = contraction_bound(a).factor;
  long limit = kMaxIters;
  if (factor > 0.0) {
    double steps = std::ceil(std::log(tol / 2.0) / std::log(factor));
    if (steps < 1.0) steps = 1.0;
    if (steps + 10.0 < static_cast<double>(kMaxIters)) limit = static_cast<long>(steps) + 10;
  }

  for (long k = 1; k <= limit; ++k) {
    RowVector next = x * m;
    double residual = (next - x).cwiseAbs().maxCoeff();
    x = next;
    if (residual <= tol) {
      x /= x.sum();
      return PowerVector{x, k, residual};
    }
  }
  throw Error(ErrorCode::NoConvergence,
              "no convergence after " + std::to_string(limit) + " iterations");
}

PowerVector power_explicit(const PoliticsMatrix& a, int pivot) {
  const int n = a.size();
  if (pivot < 0 || pivot >= n) throw Error(ErrorCode::BadParameters, "pivot out of range");
  RowVector w(n);
  if (n == 1) {
    w[0] = 1.0;
    return PowerVector{w, 0, 0.0};
  }
  IndexSet rest = complement({pivot}, n);
  Matrix block = Matrix::Identity(n - 1, n - 1) - slice(a.entries(), rest, rest);
  RowVector a_pivot_rest(n - 1);
  for (int k = 0; k < n - 1; ++k) a_pivot_rest[k] = a.entries()(pivot, rest[k]);

  Eigen::PartialPivLU<Matrix> lu(block.transpose());
  Vector solved = lu.solve(a_pivot_rest.transpose());
  if (!solved.allFinite())
    throw Error(ErrorCode::SingularBlock, "pivot block solve failed; politics matrix invariants are broken");

  w[pivot] = 1.0;
  for (int k = 0; k < n - 1; ++k) w[rest[k]] = solved[k];
  w /= w.sum();
  double residual = (w * a.entries() - w).cwiseAbs().maxCoeff();
  return PowerVector{w, 0, residual};
}

double iterate_limit(const PoliticsMatrix& a, const Vector& u, double tol) {
  if (tol <= 0.0) throw Error(ErrorCode::BadParameters, "tolerance must be positive");
  if (u.size() != a.size()) throw Error(ErrorCode::BadParameters, "vector length does not match matrix size");
  if (!u.allFinite()) throw Error(ErrorCode::NonFiniteEntry, "input vector is not finite");

  Vector v = u;
  for (long k = 0; k <= kMaxIters; ++k) {
    double range = v.maxCoeff() - v.minCoeff();
    if (range <= tol) return 0.5 * (v.maxCoeff() + v.minCoeff());
    v = a.entries() * v;
  }
  throw Error(ErrorCode::NoConvergence, "consensus limit did not converge");
}

}  // namespace polity
