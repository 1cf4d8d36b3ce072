#ifndef POLITY_ELECTION_HPP
#define POLITY_ELECTION_HPP

#include "polity/constants.hpp"
#include "polity/types.hpp"

namespace polity {

// D(i,j): probability that voter i ends up supporting candidate j. Rows are
// probability distributions whenever the voters are the candidates'
// complement.
struct SupportMatrix {
  IndexPartition partition;
  Matrix entries;
  bool near_singular = false;  // voter-block condition estimate above 1e12
};

// D_IJ = (I - A_II)^-1 A_IJ via a dense solve.
SupportMatrix support_matrix(const PoliticsMatrix& a, const IndexPartition& p);

// Dominated variant: a singular voter block is reported as
// SingularVoterBlock naming a family inside the voter set.
SupportMatrix support_matrix(const DominatedMatrix& a_hat, const IndexPartition& p);

// (I - M)^-1 as the limit of partial sums I + M + M^2 + ..., valid for any
// substochastic block. Stops once ||M^l eta||_inf < tol.
Matrix neumann_inverse(const SubmatrixBlock& m, double tol = kDefaultTol);

// D_IJ = -B_II^-1 B_IJ from any zero-row-sum interaction matrix; equals
// support_matrix for B = A - I and is invariant under positive row rescales.
SupportMatrix support_from_centered(const CenteredMatrix& b, const IndexPartition& p);

}  // namespace polity

#endif
