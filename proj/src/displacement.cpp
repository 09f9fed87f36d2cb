#include "weylkit/displacement.hpp"

#include <stdexcept>

namespace weylkit {

namespace {

void check_register(const DimSpec& dims, const PhasePoint& mu, const char* who) {
  if (mu.size() != dims.size()) {
    throw std::invalid_argument(std::string(who) + ": label does not match register size");
  }
}

// Euclidean remainder in [0, d).
std::int64_t mod_floor(std::int64_t x, std::int64_t d) {
  std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

}  // namespace

PhasePoint::PhasePoint(const DimSpec& dims, std::vector<int> a, std::vector<int> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != dims.size() || b_.size() != dims.size()) {
    throw std::invalid_argument("PhasePoint: component count does not match register size");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] < 0 || a_[i] >= dims.dim(i) || b_[i] < 0 || b_[i] >= dims.dim(i)) {
      throw std::invalid_argument("PhasePoint: component not a canonical representative");
    }
  }
}

PhasePoint PhasePoint::zero(const DimSpec& dims) {
  return PhasePoint(dims, std::vector<int>(dims.size(), 0), std::vector<int>(dims.size(), 0));
}

std::pair<PhasePoint, Phase> canonical_phase_point(const DimSpec& dims,
                                                   std::vector<std::int64_t> a,
                                                   std::vector<std::int64_t> b) {
  if (a.size() != dims.size() || b.size() != dims.size()) {
    throw std::invalid_argument("canonical_phase_point: component count mismatch");
  }
  std::vector<int> ca(dims.size()), cb(dims.size());
  Phase wrap = Phase::one();
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::int64_t d = dims.dim(i);
    ca[i] = static_cast<int>(mod_floor(a[i], d));
    cb[i] = static_cast<int>(mod_floor(b[i], d));
    // T_{A,B} = exp(i pi (ab - AB)/d) T_{a,b}; the exponent is an integer
    // multiple of pi, so the wrap phase is an exact sign.
    wrap *= Phase::pi_multiple(static_cast<std::int64_t>(ca[i]) * cb[i] - a[i] * b[i], d);
  }
  return {PhasePoint(dims, std::move(ca), std::move(cb)), wrap};
}

long phase_point_index(const DimSpec& dims, const PhasePoint& mu) {
  check_register(dims, mu, "phase_point_index");
  long idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const long d = dims.dim(i);
    idx = idx * d * d + (mu.a(i) * d + mu.b(i));
  }
  return idx;
}

PhasePoint phase_point_from_index(const DimSpec& dims, long index) {
  if (index < 0) {
    throw std::out_of_range("phase_point_from_index: index out of range");
  }
  std::vector<int> a(dims.size()), b(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    const long d = dims.dim(i);
    const long block = index % (d * d);
    index /= d * d;
    a[i] = static_cast<int>(block / d);
    b[i] = static_cast<int>(block % d);
  }
  if (index != 0) {
    throw std::out_of_range("phase_point_from_index: index out of range");
  }
  return PhasePoint(dims, std::move(a), std::move(b));
}

Eigen::MatrixXcd displacement_matrix(int d, std::int64_t a, std::int64_t b) {
  if (d < 2) {
    throw std::invalid_argument("displacement_matrix: dimension must be >= 2");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const int jb = static_cast<int>(mod_floor(j + b, d));
    // exp(-i pi a b / d) * omega^{a jb}, omega = exp(2 pi i / d), exactly:
    const Phase phase = Phase::pi_multiple(-a * b + 2 * a * jb, d);
    m(jb, j) = phase.value();
  }
  return m;
}

DisplacementAction displacement_action(const DimSpec& dims, const PhasePoint& mu) {
  check_register(dims, mu, "displacement_action");
  const long total = dims.total_dim();
  DisplacementAction act;
  act.target.resize(total);
  act.phase.resize(total);

  // Per-qudit tables: digit j -> shifted digit and phase factor.
  const std::size_t n = dims.size();
  std::vector<std::vector<int>> shifted(n);
  std::vector<std::vector<cxd>> factor(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = dims.dim(i);
    shifted[i].resize(d);
    factor[i].resize(d);
    for (int j = 0; j < d; ++j) {
      const int jb = (j + mu.b(i)) % d;
      shifted[i][j] = jb;
      factor[i][j] =
          Phase::pi_multiple(-static_cast<std::int64_t>(mu.a(i)) * mu.b(i) +
                                 2LL * mu.a(i) * jb,
                             d)
              .value();
    }
  }

  std::vector<int> digits(n);
  for (long t = 0; t < total; ++t) {
    dims.digits_of(t, digits);
    long target = 0;
    cxd phase(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      target += shifted[i][digits[i]] * dims.stride(i);
      phase *= factor[i][digits[i]];
    }
    act.target[t] = target;
    act.phase[t] = phase;
  }
  return act;
}

Eigen::MatrixXcd displacement_matrix(const DimSpec& dims, const PhasePoint& mu) {
  const DisplacementAction act = displacement_action(dims, mu);
  const long total = dims.total_dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(total, total);
  for (long j = 0; j < total; ++j) {
    m(act.target[j], j) = act.phase[j];
  }
  return m;
}

StateVector apply_displacement(const StateVector& state, const PhasePoint& mu) {
  check_register(state.dims(), mu, "apply_displacement");
  const DisplacementAction act = displacement_action(state.dims(), mu);
  Eigen::VectorXcd out(state.dims().total_dim());
  for (long j = 0; j < state.dims().total_dim(); ++j) {
    out[act.target[j]] = act.phase[j] * state.amplitudes()[j];
  }
  return StateVector(state.dims(), std::move(out));
}

std::pair<PhasePoint, Phase> compose(const PhasePoint& mu, const PhasePoint& mu2,
                                     const DimSpec& dims) {
  check_register(dims, mu, "compose");
  check_register(dims, mu2, "compose");
  std::vector<std::int64_t> a(dims.size()), b(dims.size());
  Phase phase = Phase::one();
  for (std::size_t i = 0; i < dims.size(); ++i) {
    a[i] = static_cast<std::int64_t>(mu.a(i)) + mu2.a(i);
    b[i] = static_cast<std::int64_t>(mu.b(i)) + mu2.b(i);
    // Heisenberg-Weyl product phase with unreduced exponents.
    phase *= Phase::pi_multiple(
        static_cast<std::int64_t>(mu.a(i)) * mu2.b(i) -
            static_cast<std::int64_t>(mu2.a(i)) * mu.b(i),
        dims.dim(i));
  }
  auto [canon, wrap] = canonical_phase_point(dims, std::move(a), std::move(b));
  return {std::move(canon), phase * wrap};
}

std::pair<PhasePoint, Phase> adjoint_index(const PhasePoint& mu, const DimSpec& dims) {
  check_register(dims, mu, "adjoint_index");
  // T_mu^dag = T_{-mu} exactly; only the canonical reduction adds a sign.
  std::vector<std::int64_t> a(dims.size()), b(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    a[i] = -static_cast<std::int64_t>(mu.a(i));
    b[i] = -static_cast<std::int64_t>(mu.b(i));
  }
  return canonical_phase_point(dims, std::move(a), std::move(b));
}

long supported_label_count(const DimSpec& dims, std::span<const int> positions) {
  long count = 1;
  for (int p : positions) {
    if (p < 0 || p >= static_cast<int>(dims.size())) {
      throw std::invalid_argument("supported_label_count: position out of range");
    }
    count *= static_cast<long>(dims.dim(p)) * dims.dim(p);
  }
  return count;
}

PhasePoint embedded_label(const DimSpec& dims, std::span<const int> positions,
                          long index) {
  if (index < 0) {
    throw std::out_of_range("embedded_label: index out of range");
  }
  std::vector<int> a(dims.size(), 0), b(dims.size(), 0);
  for (std::size_t i = positions.size(); i-- > 0;) {
    const int p = positions[i];
    if (p < 0 || p >= static_cast<int>(dims.size())) {
      throw std::invalid_argument("embedded_label: position out of range");
    }
    const long d = dims.dim(p);
    const long block = index % (d * d);
    index /= d * d;
    a[p] = static_cast<int>(block / d);
    b[p] = static_cast<int>(block % d);
  }
  if (index != 0) {
    throw std::out_of_range("embedded_label: index out of range");
  }
  return PhasePoint(dims, std::move(a), std::move(b));
}

cxd expectation(const StateVector& state, const PhasePoint& mu) {
  return cross_expectation(state, state, mu);
}

cxd cross_expectation(const StateVector& psi, const StateVector& phi,
                      const PhasePoint& mu) {
  if (psi.dims() != phi.dims()) {
    throw std::invalid_argument("cross_expectation: dimension mismatch");
  }
  check_register(psi.dims(), mu, "cross_expectation");
  const DisplacementAction act = displacement_action(psi.dims(), mu);
  cxd sum(0.0, 0.0);
  for (long j = 0; j < psi.dims().total_dim(); ++j) {
    sum += std::conj(psi.amplitudes()[act.target[j]]) * act.phase[j] * phi.amplitudes()[j];
  }
  return sum;
}

}  // namespace weylkit
