#ifndef POLITY_POWER_HPP
#define POLITY_POWER_HPP

#include "polity/constants.hpp"
#include "polity/types.hpp"

namespace polity {

// Positive left stationary vector, normalized to sum 1.
struct PowerVector {
  RowVector weights;
  long iterations = 0;   // 0 for direct solves
  double residual = 0.0; // ||w A - w||_inf at return
};

// eps_min = min a_ij; factor = 1 - n * eps_min. One application of A shrinks
// the value range of any vector by at least this factor.
struct ContractionBound {
  double eps_min;
  double factor;
};

ContractionBound contraction_bound(const PoliticsMatrix& a);

// Left iteration x <- xA from the uniform start until ||xA - x||_inf <= tol.
PowerVector power_iterative(const PoliticsMatrix& a, double tol = kDefaultTol);

// Block solve pivoted on `pivot`: w = [1, A_pJ (I - A_JJ)^-1] rescaled to
// sum 1, J the complement of the pivot.
PowerVector power_explicit(const PoliticsMatrix& a, int pivot = 0);

// Limit of A^k u: iterates until the value range of the vector is <= tol and
// returns the consensus scalar c (equal to w . u for the power vector w).
double iterate_limit(const PoliticsMatrix& a, const Vector& u, double tol = kDefaultTol);

}  // namespace polity

#endif
