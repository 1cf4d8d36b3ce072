#include "polity/election.hpp"

#include <Eigen/LU>
#include <sstream>

#include "polity/error.hpp"
#include "polity/families.hpp"
#include "polity/linalg.hpp"

namespace polity {

namespace {

SupportMatrix solve_support(const Matrix& entries, const IndexPartition& p) {
  Matrix a_ii = slice(entries, p.voters(), p.voters());
  Matrix a_ij = slice(entries, p.voters(), p.candidates());
  Matrix block = Matrix::Identity(a_ii.rows(), a_ii.cols()) - a_ii;

  Eigen::FullPivLU<Matrix> lu(block);
  lu.setThreshold(kRankTol);
  if (!lu.isInvertible())
    throw Error(ErrorCode::SingularBlock, "voter block I - A_II is singular");
  SupportMatrix out{p, lu.solve(a_ij), false};
  double rc = lu.rcond();
  out.near_singular = !(rc > 0.0) || 1.0 / rc > kNearSingularCond;
  return out;
}

}  // namespace

SupportMatrix support_matrix(const PoliticsMatrix& a, const IndexPartition& p) {
  if (p.society_size() != a.size())
    throw Error(ErrorCode::BadIndexSet, "partition does not match matrix size");
  return solve_support(a.entries(), p);
}

SupportMatrix support_matrix(const DominatedMatrix& a_hat, const IndexPartition& p) {
  if (p.society_size() != a_hat.size())
    throw Error(ErrorCode::BadIndexSet, "partition does not match matrix size");
  // Singularity of the voter block means a family lives entirely inside the
  // voter set; report it by name instead of a bare numerical error.
  if (auto family = family_in_block(a_hat, p.voters())) {
    std::ostringstream msg;
    msg << "voter block is singular: persons {";
    auto one_based = to_one_based(family->members);
    for (size_t k = 0; k < one_based.size(); ++k) msg << (k ? "," : "") << one_based[k];
    msg << "} form a family inside the voter set";
    throw Error(ErrorCode::SingularVoterBlock, msg.str(), one_based);
  }
  return solve_support(a_hat.entries(), p);
}

Matrix neumann_inverse(const SubmatrixBlock& m, double tol) {
  if (tol <= 0.0) throw Error(ErrorCode::BadParameters, "tolerance must be positive");
  if (m.entries.rows() != m.entries.cols())
    throw Error(ErrorCode::NonSquare, "Neumann series needs a square block");
  validate_substochastic(m.entries);

  const auto k = m.entries.rows();
  Matrix sum = Matrix::Identity(k, k);
  Matrix term = Matrix::Identity(k, k);
  // ||M^l eta||_inf <= r^l for r = max row sum < 1, so this terminates.
  for (long l = 0; l < kMaxIters; ++l) {
    term = term * m.entries;
    if ((term * Vector::Ones(k)).cwiseAbs().maxCoeff() < tol) return sum;
    sum += term;
  }
  throw Error(ErrorCode::NoConvergence, "Neumann series did not converge");
}

SupportMatrix support_from_centered(const CenteredMatrix& b, const IndexPartition& p) {
  if (p.society_size() != b.size())
    throw Error(ErrorCode::BadIndexSet, "partition does not match matrix size");
  Matrix b_ii = slice(b.entries(), p.voters(), p.voters());
  Matrix b_ij = slice(b.entries(), p.voters(), p.candidates());

  Eigen::FullPivLU<Matrix> lu(b_ii);
  lu.setThreshold(kRankTol);
  if (!lu.isInvertible())
    throw Error(ErrorCode::SingularBlock, "voter block B_II is singular");
  SupportMatrix out{p, -lu.solve(b_ij), false};
  double rc = lu.rcond();
  out.near_singular = !(rc > 0.0) || 1.0 / rc > kNearSingularCond;
  return out;
}

}  // namespace polity
