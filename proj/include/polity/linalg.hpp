#ifndef POLITY_LINALG_HPP
#define POLITY_LINALG_HPP

#include "polity/constants.hpp"
#include "polity/matrix.hpp"

namespace polity {

// Rank from a full-pivot LU with relative pivot threshold `rel_tol`.
int matrix_rank(const Matrix& m, double rel_tol = kRankTol);

// Orthonormal-ish basis of { x : m x = 0 }, one column per kernel dimension.
Matrix right_kernel(const Matrix& m, double rel_tol = kRankTol);

// Basis of { x : x m = 0 }, one row per kernel dimension.
Matrix left_kernel(const Matrix& m, double rel_tol = kRankTol);

// Unique stationary row of a row-stochastic block: the left kernel of
// I - t, normalized to sum 1 with positive sign. Throws NumericFailure when
// the kernel is not one-dimensional.
RowVector stationary_row(const Matrix& t, double rel_tol = kRankTol);

// 1 / rcond from a full-pivot LU; +inf when exactly singular.
double condition_estimate(const Matrix& m);

}  // namespace polity

#endif
