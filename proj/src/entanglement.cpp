#include "weylkit/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylkit/displacement.hpp"

namespace weylkit {

namespace {

constexpr double kPurityFloor = 1e-12;

void check_inputs(const StateVector& state, const Partition& part, const char* who) {
  if (part.register_size() != state.dims().size()) {
    throw std::invalid_argument(std::string(who) +
                                ": partition does not match register size");
  }
  if (part.positions().empty()) {
    throw std::invalid_argument(std::string(who) + ": subsystem A is empty");
  }
  if (!state.is_normalized()) {
    throw std::invalid_argument(std::string(who) + ": state is not normalized");
  }
}

}  // namespace

double renyi2_displacement(const StateVector& state, const Partition& part,
                           Renyi2Diagnostics* diag) {
  check_inputs(state, part, "renyi2_displacement");
  const DimSpec& dims = state.dims();
  const std::vector<int>& apos = part.positions();
  long dim_a = 1;
  for (int p : apos) dim_a *= dims.dim(p);

  const long labels = supported_label_count(dims, apos);
  double sum = 0.0;
  for (long m = 0; m < labels; ++m) {
    const cxd e = expectation(state, embedded_label(dims, apos, m));
    sum += std::norm(e);
  }
  sum /= static_cast<double>(dim_a);

  bool clamped = false;
  if (sum < kPurityFloor) {
    sum = kPurityFloor;
    clamped = true;
  }
  if (diag) {
    diag->purity_sum = sum;
    diag->clamped = clamped;
  }
  return -std::log(sum);
}

double renyi2_oracle(const StateVector& state, const Partition& part) {
  check_inputs(state, part, "renyi2_oracle");
  const DensityMatrix rho_a = reduced_density(state, part);
  // Tr rho_A^2 = sum_ij |rho_ij|^2 since rho_A is Hermitian.
  const double purity = rho_a.entries().squaredNorm();
  return -std::log(purity);
}

double swap_expectation(const StateVector& state, const Partition& part) {
  check_inputs(state, part, "swap_expectation");
  const DimSpec& dims = state.dims();
  const long total = dims.total_dim();
  if (total > 1024) {
    throw std::length_error("swap_expectation: doubled-space budget exceeded");
  }

  // a_part(j): the A digits of j, other digits zeroed.
  std::vector<long> a_part(total, 0);
  std::vector<int> digits(dims.size());
  for (long j = 0; j < total; ++j) {
    dims.digits_of(j, digits);
    long acc = 0;
    for (int p : part.positions()) acc += digits[p] * dims.stride(p);
    a_part[j] = acc;
  }

  const Eigen::VectorXcd& psi = state.amplitudes();
  Eigen::VectorXcd doubled(total * total), swapped(total * total);
  for (long j = 0; j < total; ++j) {
    for (long k = 0; k < total; ++k) {
      doubled[j * total + k] = psi[j] * psi[k];
    }
  }
  // SWAP_A exchanges the A digits of the two copies; it is an involution,
  // so (SWAP_A v)[j,k] = v[j', k'] with j' = j - a(j) + a(k), k' likewise.
  for (long j = 0; j < total; ++j) {
    for (long k = 0; k < total; ++k) {
      const long j2 = j - a_part[j] + a_part[k];
      const long k2 = k - a_part[k] + a_part[j];
      swapped[j * total + k] = doubled[j2 * total + k2];
    }
  }
  return doubled.dot(swapped).real();
}

}  // namespace weylkit
