#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "weylkit/state.hpp"

namespace weylkit {

/// A malformed state file: unreadable, invalid JSON, wrong schema, a
/// non-finite number, or an amplitude count that does not match the dims.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One file holds either a state vector or a density matrix:
///   {"dims": [d1, ...],
///    "amplitudes": [[re, im], ...],          // big-endian basis order
///    "meta": {...}}                           // optional, free-form
/// or, instead of "amplitudes",
///    "density": [[[re, im], ...], ...]        // row-major total x total
struct LoadedState {
  std::optional<StateVector> vector;
  std::optional<DensityMatrix> density;
  nlohmann::json meta;  // empty object when absent
};

/// Parse a state file. Throws ParseError on any malformed content.
LoadedState load_state_file(const std::string& path);

/// Convenience: load and require a state vector.
StateVector load_state_vector(const std::string& path);

/// Write a state vector in the schema above.
void save_state_file(const std::string& path, const StateVector& state,
                     const nlohmann::json& meta = nlohmann::json::object());

}  // namespace weylkit
