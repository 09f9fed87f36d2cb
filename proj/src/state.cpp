#include "weylkit/state.hpp"

#include <random>
#include <stdexcept>

namespace weylkit {

StateVector::StateVector(DimSpec dims, Eigen::VectorXcd amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  if (amps_.size() != dims_.total_dim()) {
    throw std::invalid_argument("StateVector: amplitude count does not match total dimension");
  }
}

StateVector StateVector::basis_state(const DimSpec& dims, std::span<const int> digits) {
  return basis_state(dims, dims.index_of(digits));
}

StateVector StateVector::basis_state(const DimSpec& dims, long index) {
  if (index < 0 || index >= dims.total_dim()) {
    throw std::invalid_argument("StateVector: basis index out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dims.total_dim());
  amps[index] = 1.0;
  return StateVector(dims, std::move(amps));
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(amps_.squaredNorm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw std::invalid_argument("StateVector: cannot normalize the zero vector");
  }
  return StateVector(dims_, amps_ / n);
}

DensityMatrix::DensityMatrix(DimSpec dims, Eigen::MatrixXcd entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  if (entries_.rows() != dims_.total_dim() || entries_.cols() != dims_.total_dim()) {
    throw std::invalid_argument("DensityMatrix: shape does not match total dimension");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.dims(), psi.amplitudes() * psi.amplitudes().adjoint());
}

bool DensityMatrix::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<int> dims = a.dims().dims();
  dims.insert(dims.end(), b.dims().dims().begin(), b.dims().dims().end());
  const long nb = b.dims().total_dim();
  Eigen::VectorXcd amps(a.dims().total_dim() * nb);
  for (long i = 0; i < a.dims().total_dim(); ++i) {
    amps.segment(i * nb, nb) = a.amplitudes()[i] * b.amplitudes();
  }
  return StateVector(DimSpec(std::move(dims)), std::move(amps));
}

cxd inner(const StateVector& a, const StateVector& b) {
  if (a.dims() != b.dims()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());  // Eigen dot conjugates the left factor
}

DensityMatrix reduced_density(const StateVector& state, const Partition& part) {
  const DimSpec& dims = state.dims();
  if (part.register_size() != dims.size()) {
    throw std::invalid_argument("reduced_density: partition does not match register");
  }
  const auto& pos_a = part.positions();
  if (pos_a.empty()) {
    throw std::invalid_argument("reduced_density: subsystem A is empty");
  }
  const auto pos_b = part.complement();

  std::vector<int> dims_a, dims_b;
  for (int p : pos_a) dims_a.push_back(dims.dim(p));
  for (int p : pos_b) dims_b.push_back(dims.dim(p));
  long dim_a = 1, dim_b = 1;
  for (int d : dims_a) dim_a *= d;
  for (int d : dims_b) dim_b *= d;

  // Reshape |psi> into a dim_a x dim_b matrix, then rho_A = Psi Psi^dag.
  Eigen::MatrixXcd reshaped(dim_a, dim_b);
  std::vector<int> digits(dims.size());
  for (long t = 0; t < dims.total_dim(); ++t) {
    dims.digits_of(t, digits);
    long ia = 0, ib = 0;
    for (int p : pos_a) ia = ia * dims.dim(p) + digits[p];
    for (int p : pos_b) ib = ib * dims.dim(p) + digits[p];
    reshaped(ia, ib) = state.amplitudes()[t];
  }
  return DensityMatrix(DimSpec(std::move(dims_a)), reshaped * reshaped.adjoint());
}

StateVector random_state(const DimSpec& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd amps(dims.total_dim());
  for (long i = 0; i < dims.total_dim(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    amps[i] = cxd(re, im);
  }
  return StateVector(dims, amps / amps.norm());
}

StateVector apply_unitary(const StateVector& state, std::span<const int> positions,
                          const Eigen::MatrixXcd& matrix) {
  const DimSpec& dims = state.dims();
  long sub = 1;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const int p = positions[i];
    if (p < 0 || p >= static_cast<int>(dims.size())) {
      throw std::invalid_argument("apply_unitary: position out of range");
    }
    if (i > 0 && positions[i] <= positions[i - 1]) {
      throw std::invalid_argument("apply_unitary: positions must be strictly ascending");
    }
    sub *= dims.dim(p);
  }
  if (matrix.rows() != sub || matrix.cols() != sub) {
    throw std::invalid_argument("apply_unitary: matrix shape does not match target dims");
  }

  // Sub-index of the targeted digits, and the index with those digits zeroed.
  const long total = dims.total_dim();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(total);
  std::vector<int> digits(dims.size());
  std::vector<long> sub_strides(positions.size());
  {
    long s = 1;
    for (std::size_t i = positions.size(); i-- > 0;) {
      sub_strides[i] = s;
      s *= dims.dim(positions[i]);
    }
  }
  for (long t = 0; t < total; ++t) {
    dims.digits_of(t, digits);
    long s_in = 0, base = t;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      s_in += digits[positions[i]] * sub_strides[i];
      base -= digits[positions[i]] * dims.stride(positions[i]);
    }
    const cxd amp = state.amplitudes()[t];
    if (amp == cxd(0.0, 0.0)) continue;
    for (long s_out = 0; s_out < sub; ++s_out) {
      const cxd m = matrix(s_out, s_in);
      if (m == cxd(0.0, 0.0)) continue;
      long target = base;
      long rem = s_out;
      for (std::size_t i = 0; i < positions.size(); ++i) {
        target += (rem / sub_strides[i]) * dims.stride(positions[i]);
        rem %= sub_strides[i];
      }
      out[target] += m * amp;
    }
  }
  return StateVector(dims, std::move(out));
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace weylkit
