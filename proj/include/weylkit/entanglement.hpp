#pragma once

#include "weylkit/dims.hpp"
#include "weylkit/state.hpp"

namespace weylkit {

/// Side data from renyi2_displacement. `purity_sum` is the displacement
/// estimate of Tr rho_A^2 before the log; `clamped` is set when rounding
/// pushed it below the 1e-12 floor (the caller's warning channel).
struct Renyi2Diagnostics {
  double purity_sum = 0.0;
  bool clamped = false;
};

/// Second Renyi entanglement entropy of subsystem A from single-copy
/// displacement expectations:
///   S_2 = -ln[ sum_{mu_A} |<psi| T_{mu_A} (x) I_B |psi>|^2 / dim H_A ],
/// the sum running over all dim(H_A)^2 labels supported on A.
/// Requires a normalized state and a non-empty A.
double renyi2_displacement(const StateVector& state, const Partition& part,
                           Renyi2Diagnostics* diag = nullptr);

/// Oracle: S_2 = -ln Tr rho_A^2 via the reduced density matrix.
double renyi2_oracle(const StateVector& state, const Partition& part);

/// Tr rho_A^2 as <psi (x) psi| SWAP_A |psi (x) psi>: builds the doubled
/// state, exchanges the A digits between the two copies, and returns the
/// real expectation. Requires total_dim <= 1024 (doubled-space budget).
double swap_expectation(const StateVector& state, const Partition& part);

}  // namespace weylkit
