#include "weylkit/magic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "weylkit/phase.hpp"

namespace weylkit {

namespace {

void check_normalized(const StateVector& state, const char* who) {
  if (!state.is_normalized()) {
    throw std::invalid_argument(std::string(who) + ": state is not normalized");
  }
}

Eigen::MatrixXcd fourier_gate(int d) {
  Eigen::MatrixXcd f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      f(k, j) = scale * Phase::pi_multiple(2LL * j * k, d).value();
    }
  }
  return f;
}

// Quadratic phase gate. For odd d, diag(omega^{j(j+1)/2}) with
// omega = exp(2 pi i / d); for even d that exponent is not an integer for
// all j, so the gate uses the 2d-th root tau = exp(i pi / d): diag(tau^{j^2}).
// Both choices conjugate displacements to displacements (certified below).
Eigen::MatrixXcd quadratic_phase_gate(int d) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
  for (long j = 0; j < d; ++j) {
    const Phase ph = (d % 2 == 0) ? Phase::pi_multiple(j * j, d)
                                  : Phase::pi_multiple(j * (j + 1), d);
    p(j, j) = ph.value();
  }
  return p;
}

Eigen::MatrixXcd sum_gate(int d) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      s(j * d + (j + k) % d, j * d + k) = 1.0;
    }
  }
  return s;
}

void certify(const NamedUnitary& gate, const DimSpec& local) {
  const long labels = local.total_dim() * local.total_dim();
  for (long m = 0; m < labels; ++m) {
    if (!clifford_image(local, gate.matrix, phase_point_from_index(local, m))) {
      throw std::logic_error("clifford_generators: gate " + gate.name +
                             " failed Clifford certification (convention bug)");
    }
  }
}

}  // namespace

DisplacementDistribution displacement_distribution(const StateVector& state) {
  check_normalized(state, "displacement_distribution");
  const DimSpec& dims = state.dims();
  const long total = dims.total_dim();
  Eigen::VectorXd weights(total * total);
  for (long m = 0; m < total * total; ++m) {
    const cxd e = expectation(state, phase_point_from_index(dims, m));
    weights[m] = std::max(std::norm(e) / static_cast<double>(total), 0.0);
  }
  return DisplacementDistribution{dims, std::move(weights)};
}

double stabilizer_renyi(const StateVector& state, double alpha) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("stabilizer_renyi: alpha must be positive");
  }
  if (alpha == 1.0) {
    throw std::invalid_argument(
        "stabilizer_renyi: alpha = 1 is the Shannon limit; call "
        "stabilizer_renyi_shannon");
  }
  const DisplacementDistribution dist = displacement_distribution(state);
  double sum = 0.0;
  for (long m = 0; m < dist.weights.size(); ++m) {
    const double p = dist.weights[m];
    if (p > 0.0) sum += std::pow(p, alpha);
  }
  return std::log(sum) / (1.0 - alpha) -
         std::log(static_cast<double>(state.dims().total_dim()));
}

double stabilizer_renyi_shannon(const StateVector& state) {
  const DisplacementDistribution dist = displacement_distribution(state);
  double h = 0.0;
  for (long m = 0; m < dist.weights.size(); ++m) {
    const double p = dist.weights[m];
    if (p > 0.0) h -= p * std::log(p);
  }
  return h - std::log(static_cast<double>(state.dims().total_dim()));
}

double cross_fidelity(const StateVector& state, const StateVector& other) {
  if (state.dims() != other.dims()) {
    throw std::invalid_argument("cross_fidelity: dimension mismatch");
  }
  check_normalized(state, "cross_fidelity");
  check_normalized(other, "cross_fidelity");
  const DimSpec& dims = state.dims();
  const long total = dims.total_dim();
  // Overlap of the two characteristic functions. The sum is real because
  // the mu -> -mu pairing conjugates each term; only rounding leaves an
  // imaginary residue, discarded here.
  cxd sum = 0.0;
  for (long m = 0; m < total * total; ++m) {
    const PhasePoint mu = phase_point_from_index(dims, m);
    sum += expectation(state, mu) * std::conj(expectation(other, mu));
  }
  return sum.real() / static_cast<double>(total);
}

std::optional<CliffordImage> clifford_image(const DimSpec& dims,
                                            const Eigen::MatrixXcd& u,
                                            const PhasePoint& mu) {
  const long total = dims.total_dim();
  if (u.rows() != total || u.cols() != total) {
    throw std::invalid_argument("clifford_image: unitary does not match register");
  }
  const Eigen::MatrixXcd conjugated =
      u * displacement_matrix(dims, mu) * u.adjoint();

  for (long m = 0; m < total * total; ++m) {
    const PhasePoint cand = phase_point_from_index(dims, m);
    const DisplacementAction act = displacement_action(dims, cand);
    // Tr(T_cand^dag conjugated) / total: T_cand^dag picks one entry per column.
    cxd overlap(0.0, 0.0);
    for (long j = 0; j < total; ++j) {
      overlap += std::conj(act.phase[j]) * conjugated(act.target[j], j);
    }
    overlap /= static_cast<double>(total);
    if (std::abs(std::abs(overlap) - 1.0) >= 1e-8) continue;

    const cxd phase = overlap / std::abs(overlap);
    double max_dev = 0.0;
    for (long j = 0; j < total; ++j) {
      for (long r = 0; r < total; ++r) {
        const cxd want = (r == act.target[j]) ? phase * act.phase[j] : cxd(0.0);
        max_dev = std::max(max_dev, std::abs(conjugated(r, j) - want));
      }
    }
    if (max_dev < 1e-8) {
      return CliffordImage{cand, phase};
    }
  }
  return std::nullopt;
}

std::vector<NamedUnitary> clifford_generators(const DimSpec& dims) {
  std::vector<NamedUnitary> gates;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int d = dims.dim(i);
    const bool qubit = (d == 2);
    gates.push_back({qubit ? "H" : "F", {static_cast<int>(i)}, fourier_gate(d)});
    gates.push_back(
        {qubit ? "S" : "P", {static_cast<int>(i)}, quadratic_phase_gate(d)});
  }
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
    // SUM needs one shared modulus; pairs of unequal dimension get no
    // entangling generator here.
    if (dims.dim(i) != dims.dim(i + 1)) continue;
    const int d = dims.dim(i);
    gates.push_back({d == 2 ? "CNOT" : "SUM",
                     {static_cast<int>(i), static_cast<int>(i) + 1},
                     sum_gate(d)});
  }
  for (const NamedUnitary& g : gates) {
    std::vector<int> local_dims;
    for (int p : g.positions) local_dims.push_back(dims.dim(p));
    certify(g, DimSpec(local_dims));
  }
  return gates;
}

StateVector random_stabilizer_state(const DimSpec& dims, int depth,
                                    std::uint64_t seed) {
  if (depth < 0) {
    throw std::invalid_argument("random_stabilizer_state: depth must be >= 0");
  }
  const std::vector<NamedUnitary> gates = clifford_generators(dims);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gates.size() - 1);
  StateVector state = StateVector::basis_state(dims, 0L);
  for (int step = 0; step < depth; ++step) {
    const NamedUnitary& g = gates[pick(rng)];
    state = apply_unitary(state, g.positions, g.matrix);
  }
  return state;
}

PurityEstimate purity_estimator(const StateVector& state, long samples,
                                std::uint64_t seed, bool exhaustive) {
  check_normalized(state, "purity_estimator");
  const DimSpec& dims = state.dims();
  const long labels = dims.total_dim() * dims.total_dim();

  std::vector<double> values;
  if (exhaustive) {
    values.reserve(labels);
    for (long m = 0; m < labels; ++m) {
      const double w = std::norm(expectation(state, phase_point_from_index(dims, m)));
      values.push_back(w * w);
    }
  } else {
    if (samples < 1) {
      throw std::invalid_argument("purity_estimator: samples must be >= 1");
    }
    values.reserve(samples);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(0, labels - 1);
    for (long s = 0; s < samples; ++s) {
      const double w =
          std::norm(expectation(state, phase_point_from_index(dims, pick(rng))));
      values.push_back(w * w);
    }
  }

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());

  double std_error = 0.0;
  if (!exhaustive && values.size() > 1) {
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size() - 1);
    std_error = std::sqrt(var / static_cast<double>(values.size()));
  }
  return PurityEstimate{mean, std_error};
}

}  // namespace weylkit
