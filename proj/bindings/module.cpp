// Python bindings: thin wrappers over the C++ core. States cross the
// boundary as (dims, amplitude-array) pairs; matrices as complex numpy
// arrays via pybind11's Eigen caster.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <utility>
#include <vector>

#include "weylkit/cv.hpp"
#include "weylkit/dims.hpp"
#include "weylkit/displacement.hpp"
#include "weylkit/entanglement.hpp"
#include "weylkit/magic.hpp"
#include "weylkit/state.hpp"
#include "weylkit/swap.hpp"

namespace py = pybind11;
using namespace weylkit;

namespace {

StateVector make_state(const std::vector<int>& dims,
                       const Eigen::VectorXcd& amplitudes) {
  return StateVector(DimSpec(dims), amplitudes);
}

Partition make_partition(const std::vector<int>& positions,
                         const std::vector<int>& dims) {
  return Partition(positions, dims.size());
}

PhasePoint make_label(const DimSpec& dims, const std::vector<std::int64_t>& a,
                      const std::vector<std::int64_t>& b) {
  // Raw labels are accepted; the wrap phase is dropped here because every
  // bound quantity below is phase-insensitive.
  return canonical_phase_point(dims, a, b).first;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Displacement-operator measures for qudit registers and truncated CV "
      "modes";

  // ---- displacement algebra -------------------------------------------------
  m.def(
      "displacement_matrix",
      [](const std::vector<int>& dims, const std::vector<std::int64_t>& a,
         const std::vector<std::int64_t>& b) {
        const DimSpec ds(dims);
        const auto [canon, phase] = canonical_phase_point(ds, a, b);
        return Eigen::MatrixXcd(phase.value() *
                                displacement_matrix(ds, canon));
      },
      py::arg("dims"), py::arg("a"), py::arg("b"),
      "Dense multi-qudit displacement T_{a,b}; integer labels may be "
      "arbitrary (reduction signs are applied).");

  m.def(
      "apply_displacement",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes,
         const std::vector<std::int64_t>& a,
         const std::vector<std::int64_t>& b) {
        const DimSpec ds(dims);
        return Eigen::VectorXcd(
            apply_displacement(make_state(dims, amplitudes),
                               make_label(ds, a, b))
                .amplitudes());
      },
      py::arg("dims"), py::arg("amplitudes"), py::arg("a"), py::arg("b"),
      "T_mu |psi> (canonical representative of the label).");

  m.def(
      "expectation",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes,
         const std::vector<std::int64_t>& a,
         const std::vector<std::int64_t>& b) {
        const DimSpec ds(dims);
        return expectation(make_state(dims, amplitudes), make_label(ds, a, b));
      },
      py::arg("dims"), py::arg("amplitudes"), py::arg("a"), py::arg("b"),
      "<psi| T_mu |psi> at the canonical representative of the label.");

  // ---- SWAP / transpose / negativity ---------------------------------------
  m.def(
      "swap_by_displacements",
      [](const std::vector<int>& dims) {
        return swap_by_displacements(DimSpec(dims));
      },
      py::arg("dims"), "SWAP on the doubled register by displacement average.");

  m.def(
      "exact_swap",
      [](const std::vector<int>& dims) { return exact_swap(DimSpec(dims)); },
      py::arg("dims"), "SWAP as the exact permutation matrix.");

  m.def(
      "transpose_by_displacements",
      [](const std::vector<int>& dims, const Eigen::MatrixXcd& rho) {
        return transpose_by_displacements(DensityMatrix(DimSpec(dims), rho))
            .entries();
      },
      py::arg("dims"), py::arg("rho"),
      "Matrix transpose computed through the displacement average.");

  m.def(
      "partial_transpose",
      [](const std::vector<int>& dims, const Eigen::MatrixXcd& rho,
         const std::vector<int>& partition) {
        return partial_transpose(DensityMatrix(DimSpec(dims), rho),
                                 make_partition(partition, dims))
            .entries();
      },
      py::arg("dims"), py::arg("rho"), py::arg("partition"),
      "Partial transpose over the complement of the listed subsystem A.");

  m.def(
      "negativity",
      [](const std::vector<int>& dims, const Eigen::MatrixXcd& rho,
         const std::vector<int>& partition) {
        const NegativityResult r = negativity(
            DensityMatrix(DimSpec(dims), rho), make_partition(partition, dims));
        return py::make_tuple(r.negativity, r.log_negativity);
      },
      py::arg("dims"), py::arg("rho"), py::arg("partition"),
      "(negativity, log-negativity) across the (A | complement) cut.");

  // ---- entanglement ---------------------------------------------------------
  m.def(
      "renyi2",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes,
         const std::vector<int>& partition) {
        return renyi2_displacement(make_state(dims, amplitudes),
                                   make_partition(partition, dims));
      },
      py::arg("dims"), py::arg("amplitudes"), py::arg("partition"),
      "Second Renyi entanglement entropy from displacement expectations.");

  m.def(
      "renyi2_oracle",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes,
         const std::vector<int>& partition) {
        return renyi2_oracle(make_state(dims, amplitudes),
                             make_partition(partition, dims));
      },
      py::arg("dims"), py::arg("amplitudes"), py::arg("partition"),
      "-ln Tr rho_A^2 through the reduced density matrix.");

  m.def(
      "reduced_density",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes,
         const std::vector<int>& partition) {
        return reduced_density(make_state(dims, amplitudes),
                               make_partition(partition, dims))
            .entries();
      },
      py::arg("dims"), py::arg("amplitudes"), py::arg("partition"),
      "Reduced density matrix of subsystem A.");

  // ---- magic ----------------------------------------------------------------
  m.def(
      "displacement_distribution",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes) {
        return displacement_distribution(make_state(dims, amplitudes)).weights;
      },
      py::arg("dims"), py::arg("amplitudes"),
      "p(mu) = |<T_mu>|^2 / total_dim over all labels, index order "
      "big-endian in (a_i, b_i) blocks.");

  m.def(
      "stabilizer_renyi",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes,
         double alpha) {
        return stabilizer_renyi(make_state(dims, amplitudes), alpha);
      },
      py::arg("dims"), py::arg("amplitudes"), py::arg("alpha") = 2.0,
      "Stabilizer Renyi entropy M_alpha (alpha > 0, alpha != 1).");

  m.def(
      "stabilizer_renyi_shannon",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes) {
        return stabilizer_renyi_shannon(make_state(dims, amplitudes));
      },
      py::arg("dims"), py::arg("amplitudes"),
      "The alpha -> 1 (Shannon) limit of the stabilizer Renyi entropy.");

  m.def(
      "cross_fidelity",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& a,
         const Eigen::VectorXcd& b) {
        return cross_fidelity(make_state(dims, a), make_state(dims, b));
      },
      py::arg("dims"), py::arg("a"), py::arg("b"),
      "Characteristic-function overlap sum_mu <psi|T_mu|psi> "
      "conj(<phi|T_mu|phi>) / total_dim, equal to |<psi|phi>|^2.");

  m.def(
      "random_state",
      [](const std::vector<int>& dims, std::uint64_t seed) {
        return Eigen::VectorXcd(random_state(DimSpec(dims), seed).amplitudes());
      },
      py::arg("dims"), py::arg("seed"),
      "Haar-random state vector, deterministic per seed.");

  m.def(
      "random_stabilizer_state",
      [](const std::vector<int>& dims, int depth, std::uint64_t seed) {
        return Eigen::VectorXcd(
            random_stabilizer_state(DimSpec(dims), depth, seed).amplitudes());
      },
      py::arg("dims"), py::arg("depth"), py::arg("seed"),
      "|0...0> hit by `depth` uniformly drawn Clifford generators.");

  m.def(
      "purity_estimator",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes,
         long samples, std::uint64_t seed, bool exhaustive) {
        const PurityEstimate est = purity_estimator(
            make_state(dims, amplitudes), samples, seed, exhaustive);
        return py::make_tuple(est.estimate, est.std_error);
      },
      py::arg("dims"), py::arg("amplitudes"), py::arg("samples"),
      py::arg("seed") = 1, py::arg("exhaustive") = false,
      "(estimate, std_error) for sum_mu p(mu)^2 from sampled labels.");

  // ---- CV layer --------------------------------------------------------------
  m.def(
      "cv_displacement",
      [](int cutoff, cxd z) {
        return displacement_matrix_cv(FockMode(cutoff), z);
      },
      py::arg("cutoff"), py::arg("z"),
      "Truncated single-mode displacement matrix D(z).");

  m.def(
      "coherent_state",
      [](int cutoff, cxd w) {
        const CoherentResult r = coherent_state(FockMode(cutoff), w);
        return py::make_tuple(Eigen::VectorXcd(r.state.amplitudes()),
                              r.truncation_deficit);
      },
      py::arg("cutoff"), py::arg("w"),
      "(amplitudes, truncation_deficit) of the truncated coherent state.");

  m.def(
      "weyl_function",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes,
         const std::vector<cxd>& zs) {
        return weyl_function(make_state(dims, amplitudes), zs);
      },
      py::arg("dims"), py::arg("amplitudes"), py::arg("zs"),
      "<psi| D(z_1) x ... x D(z_N) |psi> on the truncated modes.");

  m.def(
      "weyl_entropy",
      [](const std::vector<int>& dims, const Eigen::VectorXcd& amplitudes,
         double radius, double spacing) {
        const QuadratureGrid grid = QuadratureGrid::make(radius, spacing);
        const std::vector<QuadratureGrid> grids(dims.size(), grid);
        const WeylEntropyResult r =
            weyl_entropy(make_state(dims, amplitudes), grids);
        return py::make_tuple(r.entropy, r.normalization_check);
      },
      py::arg("dims"), py::arg("amplitudes"), py::arg("radius") = 6.0,
      py::arg("spacing") = 0.1,
      "(entropy, normalization_check) of the Weyl distribution by midpoint "
      "quadrature, one identical grid per mode.");

  m.def(
      "cv_swap_quadrature",
      [](int cutoff, double radius, double spacing) {
        return cv_swap_quadrature(FockMode(cutoff),
                                  QuadratureGrid::make(radius, spacing));
      },
      py::arg("cutoff"), py::arg("radius") = 6.0, py::arg("spacing") = 0.15,
      "Two-mode SWAP from the displacement quadrature.");
}
