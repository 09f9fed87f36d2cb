#include "weylkit/swap.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylkit/displacement.hpp"

namespace weylkit {

namespace {

// Dense budget for the displacement-average routines: every one of them
// touches total_dim^2 matrix entries per label and there are up to
// total_dim^2 labels.
constexpr long kDenseBudget = 100;

void check_budget(const DimSpec& dims, const char* who) {
  if (dims.total_dim() > kDenseBudget) {
    throw std::length_error(std::string(who) + ": total dimension " +
                            std::to_string(dims.total_dim()) +
                            " exceeds the dense budget of " +
                            std::to_string(kDenseBudget));
  }
}

void check_partition(const DimSpec& dims, const Partition& part, const char* who) {
  if (part.register_size() != dims.size()) {
    throw std::invalid_argument(std::string(who) +
                                ": partition does not match register size");
  }
}

// target -> source index of a generalized permutation.
std::vector<long> invert(const std::vector<long>& target) {
  std::vector<long> inv(target.size());
  for (std::size_t j = 0; j < target.size(); ++j) {
    inv[target[j]] = j;
  }
  return inv;
}

// Accumulate (T rho T^*) / weight into out, for T the generalized
// permutation T|j> = phase[j]|target[j]>. Entrywise,
//   (T rho T^*)[r, c] = phase[inv(r)] conj(phase[c]) rho[inv(r), target(c)].
void accumulate_sandwich(Eigen::MatrixXcd& out, const Eigen::MatrixXcd& rho,
                         const DisplacementAction& act, double weight) {
  const long n = rho.rows();
  const std::vector<long> inv = invert(act.target);
  for (long c = 0; c < n; ++c) {
    const cxd col_factor = std::conj(act.phase[c]) / weight;
    const long sc = act.target[c];
    for (long r = 0; r < n; ++r) {
      out(r, c) += act.phase[inv[r]] * col_factor * rho(inv[r], sc);
    }
  }
}

}  // namespace

Eigen::MatrixXcd swap_by_displacements(const DimSpec& dims) {
  check_budget(dims, "swap_by_displacements");
  const long total = dims.total_dim();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(total * total, total * total);
  // T_mu^dag (x) T_mu has one entry per (row of copy 1, column of copy 2):
  //   (T^dag)[r1, target(r1)] = conj(phase[r1]),  T[target(c2), c2] = phase[c2].
  for (long m = 0; m < total * total; ++m) {
    const PhasePoint mu = phase_point_from_index(dims, m);
    const DisplacementAction act = displacement_action(dims, mu);
    for (long r1 = 0; r1 < total; ++r1) {
      const cxd left = std::conj(act.phase[r1]) / static_cast<double>(total);
      for (long c2 = 0; c2 < total; ++c2) {
        s(r1 * total + act.target[c2], act.target[r1] * total + c2) +=
            left * act.phase[c2];
      }
    }
  }
  return s;
}

Eigen::MatrixXcd exact_swap(const DimSpec& dims) {
  check_budget(dims, "exact_swap");
  const long total = dims.total_dim();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(total * total, total * total);
  for (long f = 0; f < total; ++f) {
    for (long g = 0; g < total; ++g) {
      s(g * total + f, f * total + g) = 1.0;
    }
  }
  return s;
}

DensityMatrix transpose_by_displacements(const DensityMatrix& rho) {
  check_budget(rho.dims(), "transpose_by_displacements");
  const DimSpec& dims = rho.dims();
  const long total = dims.total_dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(total, total);
  for (long m = 0; m < total * total; ++m) {
    const PhasePoint mu = phase_point_from_index(dims, m);
    accumulate_sandwich(out, rho.entries(), displacement_action(dims, mu),
                        static_cast<double>(total));
  }
  return DensityMatrix(dims, std::move(out));
}

DensityMatrix partial_transpose(const DensityMatrix& rho, const Partition& part) {
  check_partition(rho.dims(), part, "partial_transpose");
  check_budget(rho.dims(), "partial_transpose");
  const DimSpec& dims = rho.dims();
  const std::vector<int> bpos = part.complement();
  const long labels = supported_label_count(dims, bpos);
  long dim_b = 1;
  for (int p : bpos) dim_b *= dims.dim(p);

  const long total = dims.total_dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(total, total);
  for (long m = 0; m < labels; ++m) {
    const PhasePoint mu = embedded_label(dims, bpos, m);
    accumulate_sandwich(out, rho.entries(), displacement_action(dims, mu),
                        static_cast<double>(dim_b));
  }
  return DensityMatrix(dims, std::move(out));
}

DensityMatrix partial_transpose_direct(const DensityMatrix& rho,
                                       const Partition& part) {
  check_partition(rho.dims(), part, "partial_transpose_direct");
  const DimSpec& dims = rho.dims();
  const std::vector<int> bpos = part.complement();
  const long total = dims.total_dim();

  // b_part(j) strips j down to its B digits (the rest zeroed), so swapping
  // the B digits of r and c is r - b_part(r) + b_part(c) and vice versa.
  std::vector<long> b_part(total, 0);
  std::vector<int> digits(dims.size());
  for (long j = 0; j < total; ++j) {
    dims.digits_of(j, digits);
    long acc = 0;
    for (int p : bpos) acc += digits[p] * dims.stride(p);
    b_part[j] = acc;
  }

  Eigen::MatrixXcd out(total, total);
  for (long r = 0; r < total; ++r) {
    for (long c = 0; c < total; ++c) {
      const long r2 = r - b_part[r] + b_part[c];
      const long c2 = c - b_part[c] + b_part[r];
      out(r, c) = rho.entries()(r2, c2);
    }
  }
  return DensityMatrix(dims, std::move(out));
}

NegativityResult negativity(const DensityMatrix& rho, const Partition& part) {
  if (!rho.is_hermitian(1e-8)) {
    throw std::invalid_argument("negativity: density matrix must be Hermitian");
  }
  const DensityMatrix pt = partial_transpose(rho, part);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt.entries());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("negativity: eigendecomposition failed");
  }
  const double trace_norm = es.eigenvalues().cwiseAbs().sum();
  return NegativityResult{(trace_norm - 1.0) / 2.0, std::log(trace_norm)};
}

}  // namespace weylkit
