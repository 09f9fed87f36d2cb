// Acceptance harness: one criterion per line, [PASS]/[FAIL] with the measured
// quantity and its limit. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "weylkit/cv.hpp"
#include "weylkit/dims.hpp"
#include "weylkit/displacement.hpp"
#include "weylkit/entanglement.hpp"
#include "weylkit/magic.hpp"
#include "weylkit/state.hpp"
#include "weylkit/swap.hpp"

using namespace weylkit;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

StateVector bell_state() {
  Eigen::VectorXcd v(4);
  v << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  return StateVector(DimSpec({2, 2}), v);
}

DensityMatrix random_density(const DimSpec& dims, std::uint64_t seed) {
  const StateVector a = random_state(dims, seed);
  const StateVector b = random_state(dims, seed + 711);
  Eigen::MatrixXcd m = 0.7 * (a.amplitudes() * a.amplitudes().adjoint()) +
                       0.3 * (b.amplitudes() * b.amplitudes().adjoint());
  return DensityMatrix(dims, std::move(m));
}

// --- criterion bodies -------------------------------------------------------

void criterion_1_swap_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  const std::vector<std::vector<int>> dim_sets{{2},    {3},    {4},    {5},
                                               {2, 2}, {2, 3}, {3, 3}};
  for (const auto& dv : dim_sets) {
    const DimSpec dims(dv);
    const double dev =
        (swap_by_displacements(dims) - exact_swap(dims)).cwiseAbs().maxCoeff();
    worst = std::max(worst, dev);
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst < 1e-10 && elapsed < 10.0;
  report(1, "SWAP by displacement average", pass,
         "max deviation " + fmt(worst) + " (limit 1e-10), " + fmt(elapsed) +
             " s (limit 10 s)");
}

void criterion_2_transpose_identity() {
  double worst = 0.0;
  for (const auto& dv : std::vector<std::vector<int>>{{2}, {3}, {2, 2}}) {
    const DimSpec dims(dv);
    const long total = dims.total_dim();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const StateVector re = random_state(dims, 5000 + 2 * seed);
      const StateVector im = random_state(dims, 5001 + 2 * seed);
      Eigen::MatrixXcd m(total, total);
      for (long r = 0; r < total; ++r) {
        for (long c = 0; c < total; ++c) {
          m(r, c) = re.amplitudes()[r] * im.amplitudes()[c] +
                    cxd(0.0, 1.0) * im.amplitudes()[r] * re.amplitudes()[c];
        }
      }
      const DensityMatrix out =
          transpose_by_displacements(DensityMatrix(dims, m));
      worst = std::max(
          worst,
          (out.entries() - m.transpose().eval()).cwiseAbs().maxCoeff());
    }
  }
  report(2, "transpose by displacement average", worst < 1e-10,
         "max deviation " + fmt(worst) + " over 150 matrices (limit 1e-10)");
}

void criterion_3_renyi2_triple_agreement() {
  const std::vector<std::vector<int>> dim_sets{
      {2, 2}, {2, 2, 2}, {3, 3}, {2, 3}};
  double worst = 0.0;
  for (const auto& dv : dim_sets) {
    const DimSpec dims(dv);
    const Partition part({0}, dims.size());
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const StateVector psi = random_state(dims, 9000 + seed);
      const double s_disp = renyi2_displacement(psi, part);
      const double s_oracle = renyi2_oracle(psi, part);
      const double s_swap = -std::log(swap_expectation(psi, part));
      worst = std::max(worst, std::abs(s_disp - s_oracle));
      worst = std::max(worst, std::abs(s_swap - s_oracle));
    }
  }
  const double bell_dev =
      std::abs(renyi2_displacement(bell_state(), Partition({0}, 2)) -
               std::log(2.0));
  const bool pass = worst < 1e-8 && bell_dev < 1e-10;
  report(3, "Renyi-2 triple agreement", pass,
         "max spread " + fmt(worst) + " (limit 1e-8), Bell deviation " +
             fmt(bell_dev) + " (limit 1e-10)");
}

void criterion_4_distribution_normalization() {
  const std::vector<std::vector<int>> dim_sets{
      {2, 2}, {2, 2, 2}, {3, 3}, {2, 3}};
  double worst_norm = 0.0, worst_cross = 0.0;
  for (const auto& dv : dim_sets) {
    const DimSpec dims(dv);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const StateVector psi = random_state(dims, 9100 + seed);
      worst_norm = std::max(
          worst_norm,
          std::abs(displacement_distribution(psi).weights.sum() - 1.0));
      const StateVector phi = random_state(dims, 9200 + seed);
      worst_cross =
          std::max(worst_cross, std::abs(cross_fidelity(psi, phi) -
                                         std::norm(inner(psi, phi))));
    }
  }
  const bool pass = worst_norm < 1e-9 && worst_cross < 1e-9;
  report(4, "distribution normalization and cross fidelity", pass,
         "max |sum p - 1| " + fmt(worst_norm) + ", max fidelity deviation " +
             fmt(worst_cross) + " (limits 1e-9)");
}

void criterion_5_magic_properties() {
  // Clifford invariance across all certified generators.
  double worst_cliff = 0.0;
  for (const auto& dv : std::vector<std::vector<int>>{{2, 2}, {3, 3}}) {
    const DimSpec dims(dv);
    const std::vector<NamedUnitary> gens = clifford_generators(dims);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const StateVector psi = random_state(dims, 9500 + seed);
      const double base = stabilizer_renyi(psi, 2.0);
      for (const NamedUnitary& g : gens) {
        const double moved =
            stabilizer_renyi(apply_unitary(psi, g.positions, g.matrix), 2.0);
        worst_cliff = std::max(worst_cliff, std::abs(moved - base));
      }
    }
  }

  // Stabilizer states have zero magic.
  double worst_stab = 0.0;
  for (const auto& dv :
       std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 2, 2}}) {
    const DimSpec dims(dv);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const StateVector psi = random_stabilizer_state(dims, 30, 9600 + seed);
      worst_stab = std::max(worst_stab, std::abs(stabilizer_renyi(psi, 2.0)));
    }
  }

  // Additivity over tensor products.
  double worst_add = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const StateVector a = random_state(DimSpec({2}), 9700 + seed);
    const StateVector b = random_state(DimSpec({3}), 9800 + seed);
    worst_add = std::max(
        worst_add,
        std::abs(stabilizer_renyi(tensor(a, b), 2.0) -
                 stabilizer_renyi(a, 2.0) - stabilizer_renyi(b, 2.0)));
  }

  // T state.
  Eigen::VectorXcd t(2);
  t << 1.0 / std::sqrt(2.0),
      std::polar(1.0 / std::sqrt(2.0), std::numbers::pi / 4.0);
  const double t_dev =
      std::abs(stabilizer_renyi(StateVector(DimSpec({2}), t), 2.0) -
               std::log(4.0 / 3.0));

  const bool pass = worst_cliff < 1e-8 && worst_stab < 1e-8 &&
                    worst_add < 1e-8 && t_dev < 1e-10;
  report(5, "stabilizer Renyi entropy properties", pass,
         "Clifford invariance " + fmt(worst_cliff) + ", stabilizer residue " +
             fmt(worst_stab) + ", additivity " + fmt(worst_add) +
             " (limits 1e-8), T-state deviation " + fmt(t_dev) +
             " (limit 1e-10)");
}

void criterion_6_negativity() {
  // Bell partial-transpose spectrum.
  const DensityMatrix bell = DensityMatrix::pure(bell_state());
  const DensityMatrix pt = partial_transpose(bell, Partition({0}, 2));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt.entries());
  Eigen::VectorXd ev = es.eigenvalues();  // ascending
  const double spec_dev = std::max(
      std::abs(ev(0) + 0.5),
      std::max(std::abs(ev(1) - 0.5),
               std::max(std::abs(ev(2) - 0.5), std::abs(ev(3) - 0.5))));

  // Displacement-sum PT vs index-swap PT.
  double worst_pt = 0.0;
  for (const auto& dv : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}}) {
    const DimSpec dims(dv);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const DensityMatrix rho = random_density(dims, 9900 + seed);
      for (const auto& pos : std::vector<std::vector<int>>{{0}, {1}}) {
        const Partition part(pos, dims.size());
        const double dev = (partial_transpose(rho, part).entries() -
                            partial_transpose_direct(rho, part).entries())
                               .cwiseAbs()
                               .maxCoeff();
        worst_pt = std::max(worst_pt, dev);
      }
    }
  }
  const bool pass = spec_dev < 1e-10 && worst_pt < 1e-10;
  report(6, "partial transpose and negativity", pass,
         "Bell spectrum deviation " + fmt(spec_dev) +
             ", PT oracle deviation " + fmt(worst_pt) + " (limits 1e-10)");
}

void criterion_7_weyl_entropy() {
  const FockMode mode(40);
  const QuadratureGrid grid = QuadratureGrid::make(6.0, 0.1);
  const double expected = 1.0 + std::log(std::numbers::pi);

  const StateVector vacuum =
      StateVector::basis_state(DimSpec({41}), 0L);
  const StateVector coh = coherent_state(mode, cxd(1.0, -0.5)).state;
  const WeylEntropyResult vac_res = weyl_entropy(vacuum, {grid});
  const WeylEntropyResult coh_res = weyl_entropy(coh, {grid});
  const double entropy_dev = std::max(std::abs(vac_res.entropy - expected),
                                      std::abs(coh_res.entropy - expected));

  // Normalization window for the standard battery.
  double norm_lo = 2.0, norm_hi = 0.0;
  const auto check_norm = [&](const StateVector& psi) {
    const double n = weyl_entropy(psi, {grid}).normalization_check;
    norm_lo = std::min(norm_lo, n);
    norm_hi = std::max(norm_hi, n);
  };
  check_norm(vacuum);
  check_norm(coherent_state(mode, cxd(1.06, 1.06)).state);  // |w| = 1.5
  check_norm(StateVector::basis_state(DimSpec({41}), 1L));
  check_norm(StateVector::basis_state(DimSpec({41}), 2L));

  // Invariance under a displacement and a rotation.
  const std::vector<int> pos{0};
  const Eigen::MatrixXcd d = displacement_matrix_cv(mode, cxd(-0.5, 0.3));
  const Eigen::MatrixXcd r = cv_rotation_gate(mode, 1.1);
  const double base = coh_res.entropy;
  const double inv_dev = std::max(
      std::abs(weyl_entropy(apply_unitary(coh, pos, d), {grid}).entropy - base),
      std::abs(weyl_entropy(apply_unitary(coh, pos, r), {grid}).entropy -
               base));

  const bool pass = entropy_dev < 5e-3 && norm_lo >= 0.999 &&
                    norm_hi <= 1.001 && inv_dev < 5e-3;
  report(7, "Weyl-distribution entropy", pass,
         "Gaussian entropy deviation " + fmt(entropy_dev) +
             " (limit 5e-3), normalization in [" + fmt(norm_lo) + ", " +
             fmt(norm_hi) + "] (needs [0.999, 1.001]), invariance " +
             fmt(inv_dev) + " (limit 5e-3)");
}

void criterion_8_cv_swap() {
  const auto t0 = std::chrono::steady_clock::now();
  const FockMode mode(24);
  const long dim = mode.dim();

  const Eigen::MatrixXcd s =
      cv_swap_quadrature(mode, QuadratureGrid::make(6.0, 0.15));

  // Coherent matrix elements vs the closed-form overlap product.
  const auto overlap = [](cxd u, cxd w) {
    return std::exp(-std::norm(u) / 2.0 - std::norm(w) / 2.0 +
                    std::conj(u) * w);
  };
  const std::vector<cxd> pts{cxd(0.3, 0.4), cxd(-0.5, 0.1), cxd(1.0, 0.0),
                             cxd(0.0, -0.9), cxd(0.6, -0.6)};
  double worst_elem = 0.0;
  for (std::size_t i = 0; i + 3 < pts.size(); ++i) {
    const cxd u1 = pts[i], u2 = pts[i + 1], w1 = pts[i + 2], w2 = pts[i + 3];
    const Eigen::VectorXcd bra_full = [&] {
      const Eigen::VectorXcd b1 = coherent_state(mode, u1).state.amplitudes();
      const Eigen::VectorXcd b2 = coherent_state(mode, u2).state.amplitudes();
      Eigen::VectorXcd out(dim * dim);
      for (long a = 0; a < dim; ++a) {
        out.segment(a * dim, dim) = b1(a) * b2;
      }
      return out;
    }();
    const Eigen::VectorXcd ket_full = [&] {
      const Eigen::VectorXcd k1 = coherent_state(mode, w1).state.amplitudes();
      const Eigen::VectorXcd k2 = coherent_state(mode, w2).state.amplitudes();
      Eigen::VectorXcd out(dim * dim);
      for (long a = 0; a < dim; ++a) {
        out.segment(a * dim, dim) = k1(a) * k2;
      }
      return out;
    }();
    const cxd got = bra_full.dot(s * ket_full);
    const cxd want = overlap(u1, w2) * overlap(u2, w1);
    worst_elem = std::max(worst_elem, std::abs(got - want));
  }

  // Frobenius error on the low block, then again at half the spacing.
  const auto low_block_error = [&](const Eigen::MatrixXcd& swap_matrix) {
    const long half = 12;
    double fro = 0.0;
    for (long i = 0; i <= half; ++i) {
      for (long m = 0; m <= half; ++m) {
        for (long j = 0; j <= half; ++j) {
          for (long n = 0; n <= half; ++n) {
            const double want = (i == n && m == j) ? 1.0 : 0.0;
            const double dev =
                std::abs(swap_matrix(i * dim + m, j * dim + n) - want);
            fro += dev * dev;
          }
        }
      }
    }
    return std::sqrt(fro);
  };
  const double err_coarse = low_block_error(s);
  const Eigen::MatrixXcd s_fine =
      cv_swap_quadrature(mode, QuadratureGrid::make(6.0, 0.075));
  const double err_fine = low_block_error(s_fine);
  const double rel_change = std::abs(err_fine - err_coarse) /
                            std::max(err_coarse, 1e-300);

  const double elapsed = seconds_since(t0);
  const bool pass = worst_elem < 1e-2 && rel_change < 0.10 && elapsed < 120.0;
  report(8, "CV SWAP quadrature", pass,
         "coherent-element deviation " + fmt(worst_elem) +
             " (limit 1e-2), Frobenius error " + fmt(err_coarse) + " -> " +
             fmt(err_fine) + " on halving h (relative change " +
             fmt(rel_change) + ", limit 0.10), " + fmt(elapsed) +
             " s (limit 120 s)");
}

// --- criterion 9: CLI contract ----------------------------------------------

struct CliOutcome {
  int exit_code = -1;
  std::string out;
};

CliOutcome run_cli(const std::string& bin, const std::string& args) {
  const std::string out_path = "/tmp/weylkit_acceptance_out.txt";
  const std::string cmd = bin + " " + args + " >" + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CliOutcome r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

void criterion_9_cli_contract() {
  const char* bin = std::getenv("WEYLKIT_CLI");
  if (bin == nullptr) {
    report(9, "CLI contract", false, "WEYLKIT_CLI is not set");
    return;
  }

  const CliOutcome v2 = run_cli(bin, "verify --dims 2");
  const CliOutcome v33 = run_cli(bin, "verify --dims 3,3");

  const CliOutcome rep_a = run_cli(bin, "verify --dims 2,2 --seed 3");
  const CliOutcome rep_b = run_cli(bin, "verify --dims 2,2 --seed 3");
  const bool deterministic = !rep_a.out.empty() && rep_a.out == rep_b.out;

  // Forced parse failure: malformed state file.
  const std::string bad_path = "/tmp/weylkit_acceptance_bad.json";
  {
    std::ofstream bad(bad_path);
    bad << "{ malformed";
  }
  const CliOutcome parse_fail = run_cli(bin, "magic " + bad_path);

  // Forced precondition failure: dense budget exceeded.
  const CliOutcome precond_fail = run_cli(bin, "verify --dims 50,50");

  const bool pass = v2.exit_code == 0 && v33.exit_code == 0 && deterministic &&
                    parse_fail.exit_code == 2 && precond_fail.exit_code == 3;
  report(9, "CLI contract", pass,
         "verify exits (" + std::to_string(v2.exit_code) + ", " +
             std::to_string(v33.exit_code) +
             "), deterministic output " + (deterministic ? "yes" : "NO") +
             ", parse failure exit " + std::to_string(parse_fail.exit_code) +
             " (wants 2), precondition failure exit " +
             std::to_string(precond_fail.exit_code) + " (wants 3)");
}

}  // namespace

int main() {
  criterion_1_swap_identity();
  criterion_2_transpose_identity();
  criterion_3_renyi2_triple_agreement();
  criterion_4_distribution_normalization();
  criterion_5_magic_properties();
  criterion_6_negativity();
  criterion_7_weyl_entropy();
  criterion_8_cv_swap();
  criterion_9_cli_contract();

  if (g_failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
