#include "polity/types.hpp"

#include <cmath>
#include <sstream>

#include "polity/constants.hpp"
#include "polity/error.hpp"

namespace polity {

namespace {

void require_finite(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j))) {
        std::ostringstream msg;
        msg << "entry (" << i + 1 << "," << j + 1 << ") is not finite";
        throw Error(ErrorCode::NonFiniteEntry, msg.str());
      }
}

void require_square(const Matrix& m) {
  if (m.rows() == 0) throw Error(ErrorCode::NonSquare, "matrix is empty");
  if (m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << "expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorCode::NonSquare, msg.str());
  }
}

void require_row_stochastic(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double sum = m.row(i).sum();
    if (std::abs(sum - 1.0) > kRowTol) {
      std::ostringstream msg;
      msg << "row " << i + 1 << " sums to " << sum << " (deviation " << sum - 1.0 << ")";
      throw Error(ErrorCode::RowSumViolation, msg.str(), {static_cast<int>(i) + 1});
    }
  }
}

void renormalize_rows(Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) /= m.row(i).sum();
}

}  // namespace

PoliticsMatrix PoliticsMatrix::validate(Matrix raw) {
  require_square(raw);
  require_finite(raw);
  for (Eigen::Index i = 0; i < raw.rows(); ++i)
    for (Eigen::Index j = 0; j < raw.cols(); ++j)
      if (raw(i, j) <= 0.0) {
        std::ostringstream msg;
        msg << "entry (" << i + 1 << "," << j + 1 << ") = " << raw(i, j) << " must be strictly positive";
        throw Error(ErrorCode::NonPositiveEntry, msg.str(), {static_cast<int>(i) + 1, static_cast<int>(j) + 1});
      }
  require_row_stochastic(raw);
  renormalize_rows(raw);
  return PoliticsMatrix(std::move(raw));
}

DominatedMatrix DominatedMatrix::validate(Matrix raw) {
  require_square(raw);
  require_finite(raw);
  for (Eigen::Index i = 0; i < raw.rows(); ++i)
    for (Eigen::Index j = 0; j < raw.cols(); ++j) {
      if (raw(i, j) < 0.0) {
        std::ostringstream msg;
        msg << "entry (" << i + 1 << "," << j + 1 << ") = " << raw(i, j) << " is negative";
        throw Error(ErrorCode::NegativeEntry, msg.str(), {static_cast<int>(i) + 1, static_cast<int>(j) + 1});
      }
      if (raw(i, j) < kExactZeroTol) raw(i, j) = 0.0;
    }
  require_row_stochastic(raw);
  renormalize_rows(raw);
  return DominatedMatrix(std::move(raw));
}

DominatedMatrix DominatedMatrix::from(const PoliticsMatrix& a) { return DominatedMatrix(a.entries()); }

SubmatrixBlock slice_block(const Matrix& m, IndexSet rows, IndexSet cols) {
  Matrix entries = slice(m, rows, cols);
  return SubmatrixBlock{std::move(rows), std::move(cols), std::move(entries)};
}

void validate_substochastic(const Matrix& entries) {
  require_finite(entries);
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries.cols(); ++j)
      if (entries(i, j) < 0.0) {
        std::ostringstream msg;
        msg << "entry (" << i + 1 << "," << j + 1 << ") is negative";
        throw Error(ErrorCode::NegativeEntry, msg.str());
      }
    double sum = entries.row(i).sum();
    if (sum >= 1.0 - kSubTol) {
      std::ostringstream msg;
      msg << "row " << i + 1 << " sums to " << sum << ", must stay below 1";
      throw Error(ErrorCode::NotSubstochastic, msg.str(), {static_cast<int>(i) + 1});
    }
  }
}

IndexPartition IndexPartition::of(int n, IndexSet voters, IndexSet candidates) {
  if (voters.empty()) throw Error(ErrorCode::BadIndexSet, "voter set is empty");
  if (candidates.empty()) throw Error(ErrorCode::BadIndexSet, "candidate set is empty");
  if (!set_intersection(voters, candidates).empty())
    throw Error(ErrorCode::BadIndexSet, "voter and candidate sets overlap");
  if (!voters.empty() && voters.back() >= n)
    throw Error(ErrorCode::BadIndexSet, "voter index out of range");
  if (!candidates.empty() && candidates.back() >= n)
    throw Error(ErrorCode::BadIndexSet, "candidate index out of range");
  return IndexPartition(n, std::move(voters), std::move(candidates));
}

IndexPartition IndexPartition::against_complement(int n, IndexSet candidates) {
  IndexSet voters = complement(candidates, n);
  return of(n, std::move(voters), std::move(candidates));
}

bool IndexPartition::voters_are_complement() const {
  return static_cast<int>(voters_.size() + candidates_.size()) == n_;
}

CenteredMatrix CenteredMatrix::validate(Matrix raw) {
  require_square(raw);
  require_finite(raw);
  for (Eigen::Index i = 0; i < raw.rows(); ++i) {
    for (Eigen::Index j = 0; j < raw.cols(); ++j)
      if (i != j && raw(i, j) < 0.0) {
        std::ostringstream msg;
        msg << "off-diagonal entry (" << i + 1 << "," << j + 1 << ") is negative";
        throw Error(ErrorCode::NegativeEntry, msg.str());
      }
    double sum = raw.row(i).sum();
    if (std::abs(sum) > kRowTol) {
      std::ostringstream msg;
      msg << "row " << i + 1 << " sums to " << sum << ", expected 0";
      throw Error(ErrorCode::RowSumViolation, msg.str(), {static_cast<int>(i) + 1});
    }
  }
  return CenteredMatrix(std::move(raw));
}

CenteredMatrix CenteredMatrix::of(const PoliticsMatrix& a) {
  Matrix m = a.entries() - Matrix::Identity(a.size(), a.size());
  return CenteredMatrix(std::move(m));
}

CenteredMatrix centered(const PoliticsMatrix& a) { return CenteredMatrix::of(a); }

CenteredMatrix row_rescale(const CenteredMatrix& m, const Vector& weights) {
  if (weights.size() != m.size())
    throw Error(ErrorCode::BadParameters, "weight vector length does not match matrix size");
  for (Eigen::Index i = 0; i < weights.size(); ++i)
    if (!(weights[i] > 0.0))
      throw Error(ErrorCode::NonPositiveWeight,
                  "weight " + std::to_string(i + 1) + " = " + std::to_string(weights[i]));
  Matrix out = weights.asDiagonal() * m.entries();
  return CenteredMatrix::validate(std::move(out));
}

}  // namespace polity
