#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "weylkit/dims.hpp"
#include "weylkit/phase.hpp"
#include "weylkit/state.hpp"

namespace weylkit {

/// A multi-qudit displacement label mu = (a_1,b_1; ...; a_n,b_n).
///
/// Components are always stored as canonical representatives in [0, d_i).
/// Raw integer labels are reduced through canonical_phase_point, which
/// returns the wrap phase explicitly instead of absorbing it: for even d
/// the operators T_{a,b} are only periodic up to a sign, so silent
/// reduction would corrupt phase-sensitive identities.
class PhasePoint {
 public:
  /// From canonical components. Throws if any component is out of [0, d_i).
  PhasePoint(const DimSpec& dims, std::vector<int> a, std::vector<int> b);

  /// The all-zeros label (the identity displacement).
  static PhasePoint zero(const DimSpec& dims);

  std::size_t size() const { return a_.size(); }
  int a(std::size_t i) const { return a_[i]; }
  int b(std::size_t i) const { return b_[i]; }
  const std::vector<int>& a() const { return a_; }
  const std::vector<int>& b() const { return b_; }

  bool operator==(const PhasePoint& other) const {
    return a_ == other.a_ && b_ == other.b_;
  }

 private:
  std::vector<int> a_, b_;
};

/// Reduce raw integer components mod d_i and return the wrap phase:
/// T_{raw} = phase * T_{canonical}. The phase is an exact +/-1 per qudit.
std::pair<PhasePoint, Phase> canonical_phase_point(const DimSpec& dims,
                                                   std::vector<std::int64_t> a,
                                                   std::vector<std::int64_t> b);

/// Linear index of a canonical label: big-endian over qudits, each qudit
/// contributing a_i*d_i + b_i in a block of size d_i^2. Indices run over
/// [0, total_dim^2).
long phase_point_index(const DimSpec& dims, const PhasePoint& mu);

/// Inverse of phase_point_index.
PhasePoint phase_point_from_index(const DimSpec& dims, long index);

/// Single-qudit displacement T_{a,b} = exp(-i pi a b / d) Z^a X^b as a
/// dense d x d matrix. The definition extends to all integer (a, b)
/// with the exponents taken literally; only the scalar prefactor breaks
/// d-periodicity, by the signs T_{a+d,b} = (-1)^b T_{a,b} and
/// T_{a,b+d} = (-1)^a T_{a,b}.
Eigen::MatrixXcd displacement_matrix(int d, std::int64_t a, std::int64_t b);

/// The action of a multi-qudit T_mu as a generalized permutation:
/// T_mu |j> = phase[j] |target[j]>. O(total_dim) to build and to apply.
struct DisplacementAction {
  std::vector<long> target;
  std::vector<cxd> phase;
};

DisplacementAction displacement_action(const DimSpec& dims, const PhasePoint& mu);

/// Dense matrix of a multi-qudit T_mu (Kronecker product of the factors).
Eigen::MatrixXcd displacement_matrix(const DimSpec& dims, const PhasePoint& mu);

/// T_mu |psi> without materializing the d^n x d^n matrix.
StateVector apply_displacement(const StateVector& state, const PhasePoint& mu);

/// Canonical label and total phase with T_mu T_mu' = phase * T_canonical(mu+mu'):
/// the Heisenberg-Weyl product phase exp(i pi (a b' - a' b)/d_i) per qudit,
/// times the wrap phase from reducing the summed components.
std::pair<PhasePoint, Phase> compose(const PhasePoint& mu, const PhasePoint& mu2,
                                     const DimSpec& dims);

/// Canonical label and phase with T_mu^dag = phase * T_canonical(-mu).
std::pair<PhasePoint, Phase> adjoint_index(const PhasePoint& mu, const DimSpec& dims);

/// Number of displacement labels supported on the listed qudit positions:
/// prod_i d_i^2 over the sub-register.
long supported_label_count(const DimSpec& dims, std::span<const int> positions);

/// The index-th label supported on `positions` (identity components on all
/// other qudits). Indexing is big-endian over the sub-register in the same
/// blocks-of-d_i^2 layout as phase_point_index.
PhasePoint embedded_label(const DimSpec& dims, std::span<const int> positions,
                          long index);

/// <psi| T_mu |psi>.
cxd expectation(const StateVector& state, const PhasePoint& mu);

/// <psi| T_mu |phi>.
cxd cross_expectation(const StateVector& psi, const StateVector& phi,
                      const PhasePoint& mu);

}  // namespace weylkit
