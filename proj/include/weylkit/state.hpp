#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "weylkit/dims.hpp"

namespace weylkit {

using cxd = std::complex<double>;

/// Dense pure state over a qudit register, amplitudes in the big-endian
/// basis order fixed by DimSpec.
class StateVector {
 public:
  StateVector(DimSpec dims, Eigen::VectorXcd amplitudes);

  /// |j_1,...,j_n> for the given digits.
  static StateVector basis_state(const DimSpec& dims, std::span<const int> digits);
  /// Basis state at a linear index.
  static StateVector basis_state(const DimSpec& dims, long index);

  const DimSpec& dims() const { return dims_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  double norm() const { return amps_.norm(); }
  bool is_normalized(double tol = 1e-10) const;
  /// A normalized copy; throws on the zero vector.
  StateVector normalized() const;

 private:
  DimSpec dims_;
  Eigen::VectorXcd amps_;
};

/// Dense density matrix over a qudit register.
class DensityMatrix {
 public:
  DensityMatrix(DimSpec dims, Eigen::MatrixXcd entries);

  static DensityMatrix pure(const StateVector& psi);

  const DimSpec& dims() const { return dims_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Eigen::MatrixXcd& entries() { return entries_; }

  bool is_hermitian(double tol = 1e-10) const;
  cxd trace() const { return entries_.trace(); }

 private:
  DimSpec dims_;
  Eigen::MatrixXcd entries_;
};

/// Kronecker product of two states; dims concatenate.
StateVector tensor(const StateVector& a, const StateVector& b);

/// <a|b>, conjugating the first argument.
cxd inner(const StateVector& a, const StateVector& b);

/// Reduced density matrix of subsystem A (partial trace over B).
DensityMatrix reduced_density(const StateVector& state, const Partition& part);

/// Haar-random state: i.i.d. standard complex Gaussian amplitudes,
/// normalized. Deterministic per seed.
StateVector random_state(const DimSpec& dims, std::uint64_t seed);

/// Apply a unitary acting on the listed qudit positions (ascending order,
/// big-endian sub-index) to a state. The matrix has the product of the
/// target dimensions on each side.
StateVector apply_unitary(const StateVector& state, std::span<const int> positions,
                          const Eigen::MatrixXcd& matrix);

/// Kronecker product of dense matrices (big-endian block layout).
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace weylkit
