#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/dims.hpp"
#include "weylkit/displacement.hpp"
#include "weylkit/state.hpp"

namespace weylkit {

/// The displacement probability measure of a normalized pure state:
/// weights[mu] = |<psi|T_mu|psi>|^2 / total_dim over all total_dim^2 labels,
/// in phase_point_index order. Sums to 1.
struct DisplacementDistribution {
  DimSpec dims;
  Eigen::VectorXd weights;
};

DisplacementDistribution displacement_distribution(const StateVector& state);

/// Stabilizer Renyi entropy
///   M_alpha = (1/(1-alpha)) ln sum_mu p(mu)^alpha - ln total_dim
/// for alpha > 0, alpha != 1. Zero weights are dropped from the sum.
/// The alpha = 1 case is stabilizer_renyi_shannon, selected explicitly
/// rather than by evaluating this formula near 1.
double stabilizer_renyi(const StateVector& state, double alpha);

/// The alpha -> 1 limit: -sum_mu p ln p - ln total_dim (p > 0 terms only).
double stabilizer_renyi_shannon(const StateVector& state);

/// Overlap of the displacement characteristic functions of two states:
///   sum_mu <psi|T_mu|psi> conj(<phi|T_mu|phi>) / total_dim,
/// which equals |<psi|phi>|^2 (insert the SWAP average between psi (x) phi).
/// Reduces to the p_psi normalization identity at phi = psi.
double cross_fidelity(const StateVector& state, const StateVector& other);

/// Image of a displacement under conjugation by a Clifford unitary:
/// U T_mu U^dag = phase * T_target, |phase| = 1.
struct CliffordImage {
  PhasePoint target;
  cxd phase;
};

/// Scan all candidate labels for the conjugation image of T_mu under U,
/// matching through the Hilbert-Schmidt inner product
/// Tr(T_cand^dag U T_mu U^dag) / total_dim, which must have unit modulus.
/// Returns nullopt when no candidate matches within 1e-8 (U not Clifford).
std::optional<CliffordImage> clifford_image(const DimSpec& dims,
                                            const Eigen::MatrixXcd& u,
                                            const PhasePoint& mu);

/// A gate with its register placement.
struct NamedUnitary {
  std::string name;
  std::vector<int> positions;
  Eigen::MatrixXcd matrix;
};

/// Clifford generators with placements: per qudit a Fourier gate and a
/// quadratic phase gate, per adjacent equal-dimension pair a SUM gate
/// |j,k> -> |j, j+k mod d>. At d = 2 these are H, S and CNOT. Every
/// generator is certified through clifford_image on its local register
/// before being returned; a certification failure throws logic_error
/// (it would mean a gate-convention bug, not bad input).
std::vector<NamedUnitary> clifford_generators(const DimSpec& dims);

/// |0...0> hit by `depth` generators drawn uniformly (gate and placement)
/// from clifford_generators. Deterministic per seed.
StateVector random_stabilizer_state(const DimSpec& dims, int depth,
                                    std::uint64_t seed);

struct PurityEstimate {
  double estimate;   // estimate of sum_mu p(mu)^2
  double std_error;  // sample standard error; 0 when exhaustive or samples == 1
};

/// Monte-Carlo estimate of the purity sum E = sum_mu p(mu)^2 from uniform
/// labels: each draw contributes |<psi|T_mu|psi>|^4, whose mean over the
/// total_dim^2 labels is exactly E. With exhaustive = true every label is
/// visited once (samples and seed ignored) and the estimate is exact.
PurityEstimate purity_estimator(const StateVector& state, long samples,
                                std::uint64_t seed, bool exhaustive = false);

}  // namespace weylkit
