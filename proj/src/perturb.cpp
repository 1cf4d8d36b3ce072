#include "polity/perturb.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "polity/error.hpp"
#include "polity/linalg.hpp"
#include "polity/power.hpp"

namespace polity {

namespace {

void require_correction(const DominatedMatrix& a_hat, const Matrix& b) {
  if (b.rows() != a_hat.size() || b.cols() != a_hat.size())
    throw Error(ErrorCode::BadParameters, "correction matrix size does not match");
  for (int i = 0; i < a_hat.size(); ++i) {
    double sum = b.row(i).sum();
    if (std::abs(sum) > 1e-9)
      throw Error(ErrorCode::RowSumViolation,
                  "correction row " + std::to_string(i + 1) + " sums to " + std::to_string(sum) + ", expected 0");
    for (int j = 0; j < a_hat.size(); ++j)
      if (a_hat.entries()(i, j) == 0.0 && b(i, j) < 0.0)
        throw Error(ErrorCode::BadParameters, "correction is negative on a structural zero");
  }
}

}  // namespace

Decomposition decompose(const PoliticsMatrix& a, double threshold) {
  const int n = a.size();
  if (!(threshold > 0.0) || threshold >= 1.0)
    throw Error(ErrorCode::BadParameters, "threshold must lie in (0, 1)");

  Matrix hat = a.entries();
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    double removed = 0.0;
    for (int j = 0; j < n; ++j)
      if (hat(i, j) <= threshold) {
        removed += hat(i, j);
        hat(i, j) = 0.0;
      }
    double surviving = hat.row(i).sum();
    if (surviving <= 0.0)
      throw Error(ErrorCode::ThresholdTooLarge,
                  "threshold wipes out row " + std::to_string(i + 1), {i + 1});
    if (removed > 0.0) hat.row(i) /= surviving;
    scale = std::max(scale, removed);
  }

  Matrix correction;
  if (scale == 0.0) {
    // nothing removed: A is already dominated-patterned
    scale = threshold * n;
    correction = Matrix::Zero(n, n);
  } else {
    correction = (a.entries() - hat) / scale;
  }
  return Decomposition{DominatedMatrix::validate(std::move(hat)), scale, std::move(correction)};
}

DominatedPower dominated_power(const DominatedMatrix& a_hat, const Matrix& correction) {
  require_correction(a_hat, correction);
  const int n = a_hat.size();
  const Matrix& hat = a_hat.entries();

  auto upper = upper_class_families(a_hat);
  const int q = static_cast<int>(upper.size());

  // Stationary row of each upper-class family, embedded in the full index
  // space (Lemma 7 guarantees uniqueness per family).
  std::vector<RowVector> pi(q);
  for (int k = 0; k < q; ++k) {
    RowVector local = stationary_row(slice(hat, upper[k].members, upper[k].members));
    RowVector full = RowVector::Zero(n);
    for (size_t t = 0; t < upper[k].members.size(); ++t) full[upper[k].members[t]] = local[t];
    pi[k] = std::move(full);
  }

  // Absorption profile per family: v_l(i) = probability the hat-chain from i
  // is absorbed by family l. These span the right kernel of I - A_hat and
  // resolve which stationary mix the vanishing perturbation selects.
  IndexSet upper_union;
  for (const auto& f : upper) upper_union = set_union(upper_union, f.members);
  IndexSet transient = complement(upper_union, n);

  Matrix v = Matrix::Zero(n, q);
  for (int l = 0; l < q; ++l)
    for (int i : upper[l].members) v(i, l) = 1.0;
  if (!transient.empty()) {
    Matrix t_block = Matrix::Identity(transient.size(), transient.size()) - slice(hat, transient, transient);
    Eigen::PartialPivLU<Matrix> lu(t_block);
    for (int l = 0; l < q; ++l) {
      Matrix to_family = slice(hat, transient, upper[l].members);
      Vector rhs = to_family * Vector::Ones(upper[l].members.size());
      Vector sol = lu.solve(rhs);
      for (size_t t = 0; t < transient.size(); ++t) v(transient[t], l) = sol[t];
    }
  }

  RowVector omega_hat = RowVector::Zero(n);
  if (q == 1) {
    omega_hat = pi[0];
  } else {
    // Coupling between families through the correction term; rows sum to 0.
    Matrix coupling(q, q);
    for (int k = 0; k < q; ++k) {
      RowVector flow = pi[k] * correction;
      for (int l = 0; l < q; ++l) coupling(k, l) = flow * v.col(l);
    }

    Matrix alpha_space = left_kernel(coupling);
    if (alpha_space.rows() != 1)
      throw Error(ErrorCode::AmbiguousMixing,
                  "family mixing weights are not unique (kernel dimension " +
                      std::to_string(alpha_space.rows()) + ")");
    RowVector alpha = alpha_space.row(0);
    alpha /= alpha.sum();
    for (int k = 0; k < q; ++k) omega_hat += alpha[k] * pi[k];
  }

  // First-order term: sigma (I - A_hat) = omega_hat B pins sigma only up to
  // the left kernel. The representative that actually matches the expansion
  // additionally satisfies sigma eta = 0 and the next-order solvability
  // conditions sigma B v_l = 0, which make it unique.
  Matrix shifted = Matrix::Identity(n, n) - hat;
  Matrix stacked(n + 1 + q, n);
  stacked.topRows(n) = shifted.transpose();
  stacked.row(n) = RowVector::Ones(n);
  stacked.bottomRows(q) = (correction * v).transpose();
  Vector rhs = Vector::Zero(n + 1 + q);
  rhs.head(n) = (omega_hat * correction).transpose();
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(stacked);
  RowVector sigma = cod.solve(rhs).transpose();

  int kernel_dim = static_cast<int>(left_kernel(shifted).rows());
  return DominatedPower{std::move(omega_hat), std::move(sigma), q, kernel_dim};
}

RowVector power_limit_oracle(const DominatedMatrix& a_hat, const Matrix& correction,
                             const std::vector<double>& eps_list) {
  require_correction(a_hat, correction);
  if (eps_list.empty()) throw Error(ErrorCode::BadParameters, "eps list is empty");

  std::vector<RowVector> table(eps_list.size());
  for (size_t k = 0; k < eps_list.size(); ++k) {
    double eps = eps_list[k];
    Matrix at_eps = a_hat.entries() + eps * correction;
    if (at_eps.minCoeff() <= 0.0)
      throw Error(ErrorCode::InvalidAtEps,
                  "A_hat + eps*B has a nonpositive entry at eps = " + std::to_string(eps));
    table[k] = power_explicit(PoliticsMatrix::validate(std::move(at_eps))).weights;
  }

  // Neville's scheme evaluated at eps = 0.
  for (size_t span = 1; span < eps_list.size(); ++span)
    for (size_t i = 0; i + span < eps_list.size(); ++i) {
      double e_lo = eps_list[i], e_hi = eps_list[i + span];
      table[i] = (e_hi * table[i] - e_lo * table[i + 1]) / (e_hi - e_lo);
    }
  return table[0];
}

SingularInverseExpansion singular_inverse_expansion(const Matrix& m, const Matrix& n_mat) {
  if (m.rows() != m.cols() || n_mat.rows() != n_mat.cols() || m.rows() != n_mat.rows())
    throw Error(ErrorCode::NonSquare, "expansion needs square matrices of equal size");
  const int n = static_cast<int>(m.rows());

  Matrix v = right_kernel(m);
  const int k = static_cast<int>(v.cols());
  if (k == 0) throw Error(ErrorCode::FullRank, "matrix is invertible; use a plain solve");
  Matrix u = left_kernel(m);
  if (u.rows() != k) throw Error(ErrorCode::NumericFailure, "left/right kernel dimensions disagree");

  Matrix omega = u * n_mat * v;
  Eigen::FullPivLU<Matrix> omega_lu(omega);
  omega_lu.setThreshold(kRankTol);
  if (!omega_lu.isInvertible()) {
    std::ostringstream msg;
    msg << "perturbation block U*NV is singular (" << k << "x" << k << ")";
    throw Error(ErrorCode::OmegaSingular, msg.str());
  }
  Matrix pole = v * omega_lu.solve(u);

  // Greedy principal-block selection: grow G one index at a time, keeping
  // the largest-volume invertible M_GG.
  IndexSet g;
  const int target = n - k;
  std::vector<char> used(n, 0);
  for (int step = 0; step < target; ++step) {
    int best = -1;
    double best_vol = 0.0;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      IndexSet trial = g;
      trial.push_back(c);
      std::sort(trial.begin(), trial.end());
      double vol = std::abs(slice(m, trial, trial).determinant());
      if (best == -1 || vol > best_vol) {
        best = c;
        best_vol = vol;
      }
    }
    g.push_back(best);
    std::sort(g.begin(), g.end());
    used[best] = 1;
  }
  Matrix z = Matrix::Zero(n, n);
  if (target > 0) {
    Matrix m_gg = slice(m, g, g);
    Eigen::FullPivLU<Matrix> g_lu(m_gg);
    g_lu.setThreshold(kRankTol);
    if (!g_lu.isInvertible())
      throw Error(ErrorCode::NumericFailure, "no invertible principal block of the required size");
    Matrix inv = g_lu.inverse();
    for (int r = 0; r < target; ++r)
      for (int c = 0; c < target; ++c) z(g[r], g[c]) = inv(r, c);
  }

  Matrix eye = Matrix::Identity(n, n);
  Matrix regular = (eye - pole * n_mat) * z * (eye - n_mat * pole);
  return SingularInverseExpansion{std::move(v), std::move(u), std::move(omega),
                                  std::move(pole), std::move(regular), std::move(g)};
}

SupportMatrix limit_support(const DominatedMatrix& a_hat, const Matrix& correction,
                            const IndexPartition& p) {
  require_correction(a_hat, correction);
  if (p.society_size() != a_hat.size())
    throw Error(ErrorCode::BadIndexSet, "partition does not match matrix size");

  Matrix hat_ii = slice(a_hat.entries(), p.voters(), p.voters());
  Matrix hat_ij = slice(a_hat.entries(), p.voters(), p.candidates());
  Matrix block = Matrix::Identity(hat_ii.rows(), hat_ii.cols()) - hat_ii;

  Eigen::FullPivLU<Matrix> lu(block);
  lu.setThreshold(kRankTol);
  if (lu.isInvertible()) {
    SupportMatrix out{p, lu.solve(hat_ij), false};
    double rc = lu.rcond();
    out.near_singular = !(rc > 0.0) || 1.0 / rc > kNearSingularCond;
    return out;
  }

  // Families inside the voter set make the block singular; the limit comes
  // from the eps^0 coefficient of (M + eps N)^-1 (A_hat_IJ + eps B_IJ) with
  // N = -B_II. The pole contribution pole * A_hat_IJ vanishes because the
  // left kernel is carried by families, which do not listen outside.
  Matrix b_ii = slice(correction, p.voters(), p.voters());
  Matrix b_ij = slice(correction, p.voters(), p.candidates());
  auto expansion = singular_inverse_expansion(block, -b_ii);
  Matrix d = expansion.pole * b_ij + expansion.regular * hat_ij;
  return SupportMatrix{p, std::move(d), false};
}

Consensus consensus(const DominatedMatrix& a_hat, const Matrix& correction, const Family& family,
                    const IndexPartition& p) {
  require_correction(a_hat, correction);
  auto upper = upper_class_families(a_hat);
  bool found = std::any_of(upper.begin(), upper.end(),
                           [&](const Family& f) { return f.members == family.members; });
  if (!found)
    throw Error(ErrorCode::NotUpperClass, "the given set is not an upper-class family");
  if (!is_subset(family.members, p.voters()))
    throw Error(ErrorCode::NotUpperClass, "the family must lie inside the voter set");

  const IndexSet& f = family.members;
  IndexSet h = set_difference(p.voters(), f);
  const IndexSet& j = p.candidates();

  RowVector omega_f = stationary_row(slice(a_hat.entries(), f, f));
  Matrix b_fj = slice(correction, f, j);

  RowVector raw;
  if (h.empty()) {
    raw = omega_f * b_fj;
  } else {
    auto d_hj = limit_support(a_hat, correction, IndexPartition::of(a_hat.size(), h, j));
    Matrix b_fh = slice(correction, f, h);
    raw = omega_f * (b_fj + b_fh * d_hj.entries);
  }

  double total = raw.sum();
  if (!(total > 0.0))
    throw Error(ErrorCode::NumericFailure, "consensus weights sum to " + std::to_string(total) +
                                               "; the family reaches no candidate");
  Consensus out;
  out.raw = raw;
  out.normalized = raw / total;
  return out;
}

}  // namespace polity
