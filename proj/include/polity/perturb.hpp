#ifndef POLITY_PERTURB_HPP
#define POLITY_PERTURB_HPP

#include <vector>

#include "polity/election.hpp"
#include "polity/families.hpp"
#include "polity/types.hpp"

namespace polity {

// A = dominated + scale * correction, with correction rows summing to zero.
struct Decomposition {
  DominatedMatrix dominated;
  double scale = 0.0;
  Matrix correction;
};

// First-order expansion of the power around the dominated structure:
// omega(eps) = omega_hat + eps * sigma + O(eps^2).
struct DominatedPower {
  RowVector omega_hat;
  RowVector sigma;
  int family_count = 0;  // number of upper-class families
  int kernel_dim = 0;    // left-kernel dimension of I - A_hat; sigma is the
                         // minimum-norm representative when it exceeds 1
};

// Pieces of the expansion (M + eps N)^-1 = pole/eps + regular + O(eps).
struct SingularInverseExpansion {
  Matrix right_kernel;  // n x k, columns span ker M
  Matrix left_kernel;   // k x n, rows span ker M^T
  Matrix omega_block;   // k x k, left_kernel * N * right_kernel
  Matrix pole;          // right_kernel * omega_block^-1 * left_kernel
  Matrix regular;       // (I - pole*N) Z (I - N*pole)
  IndexSet pivot_block; // G with M_GG invertible; Z embeds M_GG^-1 there
};

// Candidate weights a family settles on when none of its members runs.
struct Consensus {
  RowVector raw;
  RowVector normalized;
};

// Zeroes entries <= threshold row by row, redistributing the removed mass
// proportionally over the surviving entries; scale is the largest removed
// row mass and correction = (A - dominated) / scale.
Decomposition decompose(const PoliticsMatrix& a, double threshold);

// omega_hat via per-family stationary vectors mixed by the zero-row-sum
// coupling matrix C_kl = pi_k * B * v_l (v_l = absorption profile of family
// l); sigma solves sigma (I - A_hat) = omega_hat B with sigma * eta = 0.
DominatedPower dominated_power(const DominatedMatrix& a_hat, const Matrix& correction);

// Richardson extrapolation of the exact power of A_hat + eps B to eps = 0;
// the independent check for dominated_power.
RowVector power_limit_oracle(const DominatedMatrix& a_hat, const Matrix& correction,
                             const std::vector<double>& eps_list = {1e-3, 1e-4, 1e-5});

SingularInverseExpansion singular_inverse_expansion(const Matrix& m, const Matrix& n);

// lim_{eps->0} (I - A_II)^-1 A_IJ for A = A_hat + eps B: a plain solve when
// the voter block is regular, the singular-inverse expansion otherwise.
SupportMatrix limit_support(const DominatedMatrix& a_hat, const Matrix& correction,
                            const IndexPartition& p);

// c_j = omega_hat_F (B_FJ + B_FH D_HJ) for an upper-class family F inside
// the voter set, H the remaining voters; normalized to sum 1 over J.
Consensus consensus(const DominatedMatrix& a_hat, const Matrix& correction, const Family& family,
                    const IndexPartition& p);

}  // namespace polity

#endif
