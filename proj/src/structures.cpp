#include "polity/structures.hpp"

#include <cmath>
#include <string>

#include "polity/constants.hpp"
#include "polity/error.hpp"
#include "polity/rng.hpp"

namespace polity {

TreeSpec TreeSpec::of(std::vector<int> parent) {
  const int n = static_cast<int>(parent.size());
  if (n == 0) throw Error(ErrorCode::BadParameters, "tree needs at least one person");
  int root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] < 0 || parent[i] >= n)
      throw Error(ErrorCode::CyclicSpec, "parent of person " + std::to_string(i + 1) + " out of range");
    if (parent[i] == i) {
      if (root != -1) throw Error(ErrorCode::CyclicSpec, "more than one root");
      root = i;
    }
  }
  if (root == -1) throw Error(ErrorCode::CyclicSpec, "no root (someone must report to themselves)");
  for (int i = 0; i < n; ++i) {
    int hops = 0, v = i;
    while (v != root) {
      v = parent[v];
      if (++hops > n) throw Error(ErrorCode::CyclicSpec, "person " + std::to_string(i + 1) + " never reaches the root");
    }
  }
  TreeSpec spec;
  spec.parent = std::move(parent);
  spec.root = root;
  return spec;
}

DominatedMatrix gen_father_and_sons(int k, std::optional<RowVector> leader_row) {
  if (k < 1) throw Error(ErrorCode::BadParameters, "family size must be at least 1");
  Matrix m = Matrix::Zero(k, k);
  m.col(0).setOnes();
  if (leader_row) {
    if (leader_row->size() != k)
      throw Error(ErrorCode::BadDistribution, "leader row length does not match family size");
    for (int j = 0; j < k; ++j)
      if ((*leader_row)[j] < 0.0)
        throw Error(ErrorCode::BadDistribution, "leader row has a negative entry");
    if (std::abs(leader_row->sum() - 1.0) > kRowTol)
      throw Error(ErrorCode::BadDistribution, "leader row must sum to 1");
    m.row(0) = *leader_row;
  }
  return DominatedMatrix::validate(std::move(m));
}

DominatedMatrix gen_family_tree(const TreeSpec& spec) {
  const int n = static_cast<int>(spec.parent.size());
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, spec.parent[i]) = 1.0;
  return DominatedMatrix::validate(std::move(m));
}

PreferenceGroups tree_preference_groups(const TreeSpec& spec, const IndexSet& candidates) {
  const int n = static_cast<int>(spec.parent.size());
  if (candidates.empty()) throw Error(ErrorCode::BadIndexSet, "candidate set is empty");
  if (!candidates.empty() && candidates.back() >= n)
    throw Error(ErrorCode::BadIndexSet, "candidate index out of range");

  PreferenceGroups groups;
  groups.per_candidate.resize(candidates.size());
  for (int i = 0; i < n; ++i) {
    if (i == spec.root || contains(candidates, i)) continue;
    int v = spec.parent[i];
    while (true) {
      if (contains(candidates, v)) {
        size_t slot = std::lower_bound(candidates.begin(), candidates.end(), v) - candidates.begin();
        groups.per_candidate[slot].push_back(i);
        break;
      }
      if (v == spec.root) {
        groups.leader_followers.push_back(i);
        break;
      }
      v = spec.parent[v];
    }
  }
  return groups;
}

DominatedMatrix gen_equality(int k, double s) {
  if (k < 1) throw Error(ErrorCode::BadParameters, "family size must be at least 1");
  if (!(s > 0.0)) throw Error(ErrorCode::BadParameters, "s must be positive");
  double r = 1.0 - (k - 1) * s;
  if (r < -kRowTol) throw Error(ErrorCode::BadParameters, "(k-1)*s exceeds 1");
  if (r < 0.0) r = 0.0;
  Matrix m = Matrix::Constant(k, k, s);
  m.diagonal().setConstant(r);
  return DominatedMatrix::validate(std::move(m));
}

PoliticsMatrix gen_near_identity(const CenteredMatrix& interaction, double eps) {
  const int n = interaction.size();
  if (!(eps > 0.0)) throw Error(ErrorCode::BadParameters, "eps must be positive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && n > 1 && !(interaction.entries()(i, j) > 0.0))
        throw Error(ErrorCode::BadParameters, "interaction requires strictly positive off-diagonal entries");
  Matrix m = Matrix::Identity(n, n) + eps * interaction.entries();
  for (int i = 0; i < n; ++i)
    if (m(i, i) <= 0.0)
      throw Error(ErrorCode::EpsTooLarge,
                  "eps = " + std::to_string(eps) + " drives diagonal entry " + std::to_string(i + 1) + " below zero");
  return PoliticsMatrix::validate(std::move(m));
}

CenteredMatrix random_interaction(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "size must be at least 1");
  auto rng = Xoshiro256StarStar::for_stream(seed, 0);
  Matrix b = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      b(i, j) = 0.1 + 0.9 * rng.uniform01();
      off += b(i, j);
    }
    b(i, i) = -off;
  }
  return CenteredMatrix::validate(std::move(b));
}

}  // namespace polity
