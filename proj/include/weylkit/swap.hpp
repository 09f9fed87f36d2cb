#pragma once

#include <Eigen/Dense>

#include "weylkit/dims.hpp"
#include "weylkit/state.hpp"

namespace weylkit {

/// SWAP on H (x) H, H the full register space, as the displacement average
///   (1/total_dim) sum_mu T_mu^dag (x) T_mu.
/// Dense (total_dim^2 x total_dim^2); requires total_dim <= 100.
Eigen::MatrixXcd swap_by_displacements(const DimSpec& dims);

/// The exact permutation SWAP |f>(x)|g> = |g>(x)|f>; the oracle for
/// swap_by_displacements. Same dense budget.
Eigen::MatrixXcd exact_swap(const DimSpec& dims);

/// rho^T = (1/total_dim) sum_mu T_mu rho T_mu^*. Equals the entrywise
/// transpose; computed by the displacement sum, not by transposing.
DensityMatrix transpose_by_displacements(const DensityMatrix& rho);

/// Partial transpose over subsystem B, the complement of part's subsystem A:
///   (1/dim H_B) sum_{mu_B} (I_A (x) T_{mu_B}) rho (I_A (x) T_{mu_B})^*.
/// An empty part transposes the full register. Computed by the displacement
/// sum; partial_transpose_direct is the index-swap oracle.
DensityMatrix partial_transpose(const DensityMatrix& rho, const Partition& part);

/// Direct partial transpose over B = complement of part: entry at
/// (row, col) is taken from the indices with the B digits of row and col
/// exchanged.
DensityMatrix partial_transpose_direct(const DensityMatrix& rho,
                                       const Partition& part);

struct NegativityResult {
  double negativity;      // (||rho^PT||_1 - 1) / 2
  double log_negativity;  // ln ||rho^PT||_1
};

/// Negativity across the (A | B) cut from the eigenvalues of the partial
/// transpose (Hermitian, so the trace norm is the sum of |eigenvalue|).
/// Requires a Hermitian input of unit trace.
NegativityResult negativity(const DensityMatrix& rho, const Partition& part);

}  // namespace weylkit
