#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "weylkit/state.hpp"

namespace weylkit {

/// A single bosonic mode truncated at Fock cutoff N_c (basis |0>..|N_c>).
class FockMode {
 public:
  explicit FockMode(int cutoff);

  int cutoff() const { return cutoff_; }
  long dim() const { return cutoff_ + 1; }
  /// Annihilation operator: sqrt(n) on the first superdiagonal.
  const Eigen::MatrixXcd& annihilation() const { return a_; }

 private:
  int cutoff_;
  Eigen::MatrixXcd a_;
};

/// <m|D(z)|n> from the associated-Laguerre closed form
///   sqrt(n!/m!) z^{m-n} e^{-|z|^2/2} L_n^{(m-n)}(|z|^2)   (m >= n),
/// with the m < n case by conjugate symmetry <m|D(z)|n> = conj(<n|D(-z)|m>).
cxd displacement_element(int m, int n, cxd z);

/// The (N_c+1)x(N_c+1) matrix of displacement_element values. Approximately
/// unitary for |z| well below sqrt(N_c); the deviation concentrates in the
/// high-Fock rows (not enforced here).
Eigen::MatrixXcd displacement_matrix_cv(const FockMode& mode, cxd z);

struct CoherentResult {
  StateVector state;          // renormalized truncated coherent state
  double truncation_deficit;  // 1 - sum of |e^{-|w|^2/2} w^n / sqrt(n!)|^2
};

/// Truncated coherent state |w> = D(w)|0>.
CoherentResult coherent_state(const FockMode& mode, cxd w);

/// Multimode Weyl (characteristic) function
///   W(z_1..z_N) = <psi| D(z_1) (x) ... (x) D(z_N) |psi>,
/// one z per mode; mode m's cutoff is dims.dim(m) - 1.
cxd weyl_function(const StateVector& state, const std::vector<cxd>& zs);

/// p_psi(z_1..z_N) = |W|^2 / pi^N.
double weyl_distribution(const StateVector& state, const std::vector<cxd>& zs);

/// Cartesian midpoint rule over the disc |z| <= radius: nodes at
/// ((i+1/2)h, (j+1/2)h), each with weight h^2. The weight total approximates
/// pi radius^2.
struct QuadratureGrid {
  double radius = 0.0;
  double spacing = 0.0;
  std::vector<cxd> nodes;
  double node_weight = 0.0;  // spacing^2

  static QuadratureGrid make(double radius, double spacing);
};

struct WeylEntropyResult {
  double entropy;              // -sum_nodes weight * p ln p  (p > 0 only)
  double normalization_check;  // sum_nodes weight * p, should be close to 1
};

/// Differential entropy of p_psi by quadrature, one grid per mode. The
/// normalization check self-reports an inadequate grid; it is returned,
/// never enforced.
WeylEntropyResult weyl_entropy(const StateVector& state,
                               const std::vector<QuadratureGrid>& grids);

/// Quadrature of the two-mode SWAP representation
///   integral (d^2 z / pi) D(-z) (x) D(z)
/// over the grid, as a dense matrix on the doubled truncated space.
Eigen::MatrixXcd cv_swap_quadrature(const FockMode& mode,
                                    const QuadratureGrid& grid);

/// Truncated phase rotation exp(i theta a^dag a) (exact diagonal).
Eigen::MatrixXcd cv_rotation_gate(const FockMode& mode, double theta);

/// Truncated squeeze exp((xi^* a^2 - xi a^dag^2)/2) by matrix exponential;
/// kept weak (|xi| <= 0.3) so the truncated matrix stays near-unitary.
Eigen::MatrixXcd cv_squeeze_gate(const FockMode& mode, cxd xi);

struct CvGate {
  std::string name;
  Eigen::MatrixXcd matrix;
};

/// A representative set of Gaussian operations on the truncated mode:
/// a displacement, two rotations, and two weak squeezes.
std::vector<CvGate> gaussian_ops(const FockMode& mode);

}  // namespace weylkit
