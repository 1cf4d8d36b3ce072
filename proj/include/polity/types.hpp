#ifndef POLITY_TYPES_HPP
#define POLITY_TYPES_HPP

#include "polity/matrix.hpp"

namespace polity {

// Strictly positive row-stochastic matrix. a(i,j) is the probability that
// person i listens to person j. Rows are renormalized exactly on validation.
class PoliticsMatrix {
 public:
  static PoliticsMatrix validate(Matrix raw);

  int size() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

 private:
  explicit PoliticsMatrix(Matrix m) : entries_(std::move(m)) {}
  Matrix entries_;
};

// Nonnegative row-stochastic matrix; the zero pattern carries the family
// structure. Entries below kExactZeroTol are snapped to exact zeros.
class DominatedMatrix {
 public:
  static DominatedMatrix validate(Matrix raw);
  static DominatedMatrix from(const PoliticsMatrix& a);

  int size() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

 private:
  explicit DominatedMatrix(Matrix m) : entries_(std::move(m)) {}
  Matrix entries_;
};

// A rectangular slice of a larger matrix, remembering where it came from.
struct SubmatrixBlock {
  IndexSet rows;
  IndexSet cols;
  Matrix entries;
};

SubmatrixBlock slice_block(const Matrix& m, IndexSet rows, IndexSet cols);

// Checks the substochastic-block property: entries >= 0 and every row sum
// strictly below 1 - kSubTol. Throws NotSubstochastic / NegativeEntry.
void validate_substochastic(const Matrix& entries);

// Voter set I and candidate set J, disjoint and nonempty.
class IndexPartition {
 public:
  static IndexPartition of(int n, IndexSet voters, IndexSet candidates);
  // Voters default to the complement of the candidate set.
  static IndexPartition against_complement(int n, IndexSet candidates);

  int society_size() const { return n_; }
  const IndexSet& voters() const { return voters_; }
  const IndexSet& candidates() const { return candidates_; }
  bool voters_are_complement() const;

 private:
  IndexPartition(int n, IndexSet voters, IndexSet candidates)
      : n_(n), voters_(std::move(voters)), candidates_(std::move(candidates)) {}
  int n_;
  IndexSet voters_;
  IndexSet candidates_;
};

// Zero-row-sum matrix with nonnegative off-diagonal entries: A - I for a
// politics matrix, any positive row rescale of it, or a mixing correction B.
class CenteredMatrix {
 public:
  static CenteredMatrix validate(Matrix raw);
  static CenteredMatrix of(const PoliticsMatrix& a);

  int size() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

 private:
  explicit CenteredMatrix(Matrix m) : entries_(std::move(m)) {}
  Matrix entries_;
};

CenteredMatrix centered(const PoliticsMatrix& a);

// Multiplies row i by weights[i] (> 0). Row sums stay zero.
CenteredMatrix row_rescale(const CenteredMatrix& m, const Vector& weights);

}  // namespace polity

#endif
