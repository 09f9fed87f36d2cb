#include "weylkit/cv.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weylkit {

namespace {

constexpr double kPi = std::numbers::pi;

// L_n^{(k)}(x) by the three-term recurrence
//   (j+1) L_{j+1} = (2j + k + 1 - x) L_j - (j + k) L_{j-1}.
double laguerre(int n, int k, double x) {
  if (n == 0) return 1.0;
  double lprev = 1.0;
  double lcur = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double lnext = ((2.0 * j + k + 1.0 - x) * lcur - (j + k) * lprev) / (j + 1.0);
    lprev = lcur;
    lcur = lnext;
  }
  return lcur;
}

void check_mode_count(const StateVector& state, std::size_t zs, const char* who) {
  if (zs != state.dims().size()) {
    throw std::invalid_argument(std::string(who) +
                                ": one displacement argument per mode required");
  }
  if (!state.is_normalized()) {
    throw std::invalid_argument(std::string(who) + ": state is not normalized");
  }
}

}  // namespace

FockMode::FockMode(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 1) {
    throw std::invalid_argument("FockMode: cutoff must be >= 1");
  }
  a_ = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) {
    a_(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
}

cxd displacement_element(int m, int n, cxd z) {
  if (m < 0 || n < 0) {
    throw std::invalid_argument("displacement_element: negative Fock index");
  }
  if (m < n) return std::conj(displacement_element(n, m, -z));
  const double x = std::norm(z);
  const int k = m - n;
  // sqrt(n!/m!) e^{-x/2} in one exponential for stability
  const double pref = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) - 0.5 * x);
  cxd zk(1.0, 0.0);
  for (int i = 0; i < k; ++i) zk *= z;
  return pref * zk * laguerre(n, k, x);
}

Eigen::MatrixXcd displacement_matrix_cv(const FockMode& mode, cxd z) {
  const long dim = mode.dim();
  const double x = std::norm(z);
  const double ex = std::exp(-0.5 * x);

  // sqrt(i!) stays finite up to i ~ 300, far past any sensible cutoff.
  std::vector<double> sqrt_fact(dim);
  sqrt_fact[0] = 1.0;
  for (long i = 1; i < dim; ++i) {
    sqrt_fact[i] = sqrt_fact[i - 1] * std::sqrt(static_cast<double>(i));
  }
  std::vector<cxd> zpow(dim), mzbar_pow(dim);
  zpow[0] = mzbar_pow[0] = 1.0;
  for (long i = 1; i < dim; ++i) {
    zpow[i] = zpow[i - 1] * z;
    mzbar_pow[i] = mzbar_pow[i - 1] * (-std::conj(z));
  }

  Eigen::MatrixXcd out(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n <= m; ++n) {
      const int k = m - n;
      const double common = sqrt_fact[n] / sqrt_fact[m] * ex * laguerre(n, k, x);
      out(m, n) = common * zpow[k];
      // <n|D(z)|m> = conj(<m|D(-z)|n>) shares the ratio and Laguerre value.
      if (m != n) out(n, m) = common * mzbar_pow[k];
    }
  }
  return out;
}

CoherentResult coherent_state(const FockMode& mode, cxd w) {
  const long dim = mode.dim();
  Eigen::VectorXcd amps(dim);
  cxd cur = std::exp(-0.5 * std::norm(w));
  double captured = 0.0;
  for (long n = 0; n < dim; ++n) {
    if (n > 0) cur *= w / std::sqrt(static_cast<double>(n));
    amps[n] = cur;
    captured += std::norm(cur);
  }
  StateVector truncated(DimSpec({static_cast<int>(dim)}), std::move(amps));
  return CoherentResult{truncated.normalized(), 1.0 - captured};
}

cxd weyl_function(const StateVector& state, const std::vector<cxd>& zs) {
  check_mode_count(state, zs.size(), "weyl_function");
  StateVector phi = state;
  for (std::size_t m = 0; m < zs.size(); ++m) {
    const FockMode mode(state.dims().dim(m) - 1);
    const int pos[1] = {static_cast<int>(m)};
    phi = apply_unitary(phi, pos, displacement_matrix_cv(mode, zs[m]));
  }
  return inner(state, phi);
}

double weyl_distribution(const StateVector& state, const std::vector<cxd>& zs) {
  const cxd w = weyl_function(state, zs);
  return std::norm(w) / std::pow(kPi, static_cast<double>(zs.size()));
}

QuadratureGrid QuadratureGrid::make(double radius, double spacing) {
  if (!(radius > 0.0) || !(spacing > 0.0)) {
    throw std::invalid_argument("QuadratureGrid: radius and spacing must be positive");
  }
  QuadratureGrid grid;
  grid.radius = radius;
  grid.spacing = spacing;
  grid.node_weight = spacing * spacing;
  const long half = static_cast<long>(std::ceil(radius / spacing));
  const double r2 = radius * radius;
  for (long i = -half; i < half; ++i) {
    const double re = (i + 0.5) * spacing;
    for (long j = -half; j < half; ++j) {
      const double im = (j + 0.5) * spacing;
      if (re * re + im * im <= r2) {
        grid.nodes.emplace_back(re, im);
      }
    }
  }
  return grid;
}

WeylEntropyResult weyl_entropy(const StateVector& state,
                               const std::vector<QuadratureGrid>& grids) {
  check_mode_count(state, grids.size(), "weyl_entropy");
  for (const QuadratureGrid& g : grids) {
    if (g.nodes.empty()) {
      throw std::invalid_argument("weyl_entropy: empty quadrature grid");
    }
  }
  const std::size_t n_modes = grids.size();
  const double pi_n = std::pow(kPi, static_cast<double>(n_modes));

  double entropy = 0.0;
  double norm_check = 0.0;
  const auto accumulate = [&](double p, double weight) {
    norm_check += weight * p;
    if (p > 0.0) entropy -= weight * p * std::log(p);
  };

  if (n_modes == 1) {
    // Stream the nodes; one displacement matrix at a time.
    const FockMode mode(state.dims().dim(0) - 1);
    const Eigen::VectorXcd& psi = state.amplitudes();
    for (const cxd z : grids[0].nodes) {
      const cxd w = psi.dot(displacement_matrix_cv(mode, z) * psi);
      accumulate(std::norm(w) / pi_n, grids[0].node_weight);
    }
    return WeylEntropyResult{entropy, norm_check};
  }

  // Multimode: cache per-mode node matrices, then walk the product grid.
  long cache_entries = 0;
  double work = 1.0;
  for (std::size_t m = 0; m < n_modes; ++m) {
    const long dim = state.dims().dim(m);
    cache_entries += static_cast<long>(grids[m].nodes.size()) * dim * dim;
    work *= static_cast<double>(grids[m].nodes.size());
  }
  work *= static_cast<double>(state.dims().total_dim()) * n_modes;
  if (cache_entries > 8'000'000 || work > 2e9) {
    throw std::length_error("weyl_entropy: product grid exceeds the budget");
  }

  std::vector<std::vector<Eigen::MatrixXcd>> mats(n_modes);
  for (std::size_t m = 0; m < n_modes; ++m) {
    const FockMode mode(state.dims().dim(m) - 1);
    mats[m].reserve(grids[m].nodes.size());
    for (const cxd z : grids[m].nodes) {
      mats[m].push_back(displacement_matrix_cv(mode, z));
    }
  }

  std::vector<std::size_t> idx(n_modes, 0);
  while (true) {
    StateVector phi = state;
    double weight = 1.0;
    for (std::size_t m = 0; m < n_modes; ++m) {
      const int pos[1] = {static_cast<int>(m)};
      phi = apply_unitary(phi, pos, mats[m][idx[m]]);
      weight *= grids[m].node_weight;
    }
    accumulate(std::norm(inner(state, phi)) / pi_n, weight);

    std::size_t m = n_modes;
    while (m-- > 0) {
      if (++idx[m] < grids[m].nodes.size()) break;
      idx[m] = 0;
      if (m == 0) return WeylEntropyResult{entropy, norm_check};
    }
  }
}

Eigen::MatrixXcd cv_swap_quadrature(const FockMode& mode,
                                    const QuadratureGrid& grid) {
  const long dim = mode.dim();
  const long dim2 = dim * dim;
  if (dim2 > 4096) {
    throw std::length_error("cv_swap_quadrature: doubled space exceeds the dense budget");
  }

  // sum_z (w/pi) D(-z) (x) D(z), accumulated as a rank-(chunk) update:
  //   s4[i + j*dim, m + n*dim] = sum_z (w/pi) D(-z)(i,j) D(z)(m,n),
  // then reindexed to the Kronecker layout (i*dim + m, j*dim + n).
  const long chunk = 128;
  Eigen::MatrixXcd s4 = Eigen::MatrixXcd::Zero(dim2, dim2);
  Eigen::MatrixXcd left(dim2, chunk), right(dim2, chunk);
  long filled = 0;
  const double scale = grid.node_weight / kPi;
  const auto flush = [&]() {
    if (filled > 0) {
      s4.noalias() += left.leftCols(filled) * right.leftCols(filled).transpose();
      filled = 0;
    }
  };
  for (const cxd z : grid.nodes) {
    const Eigen::MatrixXcd d_plus = displacement_matrix_cv(mode, z);
    const Eigen::MatrixXcd d_minus = d_plus.adjoint();  // D(-z) = D(z)^dag
    left.col(filled) = Eigen::Map<const Eigen::VectorXcd>(d_minus.data(), dim2);
    right.col(filled) =
        Eigen::Map<const Eigen::VectorXcd>(d_plus.data(), dim2) * scale;
    if (++filled == chunk) flush();
  }
  flush();

  Eigen::MatrixXcd s(dim2, dim2);
  for (long i = 0; i < dim; ++i) {
    for (long j = 0; j < dim; ++j) {
      for (long m = 0; m < dim; ++m) {
        for (long n = 0; n < dim; ++n) {
          s(i * dim + m, j * dim + n) = s4(i + j * dim, m + n * dim);
        }
      }
    }
  }
  return s;
}

Eigen::MatrixXcd cv_rotation_gate(const FockMode& mode, double theta) {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(mode.dim(), mode.dim());
  for (long n = 0; n < mode.dim(); ++n) {
    r(n, n) = std::polar(1.0, theta * static_cast<double>(n));
  }
  return r;
}

Eigen::MatrixXcd cv_squeeze_gate(const FockMode& mode, cxd xi) {
  if (std::abs(xi) > 0.3) {
    throw std::invalid_argument(
        "cv_squeeze_gate: |xi| <= 0.3 (weak squeezing only; truncation error "
        "grows quickly beyond that)");
  }
  const Eigen::MatrixXcd& a = mode.annihilation();
  const Eigen::MatrixXcd ad = a.adjoint();
  const Eigen::MatrixXcd gen =
      0.5 * (std::conj(xi) * a * a - xi * ad * ad);
  return gen.exp();
}

std::vector<CvGate> gaussian_ops(const FockMode& mode) {
  std::vector<CvGate> ops;
  ops.push_back({"displace(0.5+0.25i)",
                 displacement_matrix_cv(mode, cxd(0.5, 0.25))});
  ops.push_back({"rotate(0.7)", cv_rotation_gate(mode, 0.7)});
  ops.push_back({"rotate(1.3)", cv_rotation_gate(mode, 1.3)});
  ops.push_back({"squeeze(0.2)", cv_squeeze_gate(mode, cxd(0.2, 0.0))});
  ops.push_back({"squeeze(0.15i)", cv_squeeze_gate(mode, cxd(0.0, 0.15))});
  return ops;
}

}  // namespace weylkit
