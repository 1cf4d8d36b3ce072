#ifndef POLITY_MATRIX_HPP
#define POLITY_MATRIX_HPP

#include <Eigen/Dense>
#include <vector>

namespace polity {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

// 0-based person indices, kept sorted and duplicate-free. File formats and
// reports use 1-based indices; conversion happens at those boundaries only.
using IndexSet = std::vector<int>;

// Sorts, checks range [0, n) and rejects duplicates.
IndexSet make_index_set(std::vector<int> raw, int n);

IndexSet complement(const IndexSet& s, int n);
bool contains(const IndexSet& s, int i);
bool is_subset(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);

Matrix slice(const Matrix& m, const IndexSet& rows, const IndexSet& cols);
Vector slice(const Vector& v, const IndexSet& s);

std::vector<int> to_one_based(const IndexSet& s);
IndexSet from_one_based(const std::vector<int>& s, int n);

}  // namespace polity

#endif
