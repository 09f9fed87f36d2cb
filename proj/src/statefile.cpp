#include "weylkit/statefile.hpp"

#include <cmath>
#include <fstream>

namespace weylkit {

namespace {

double finite_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) {
    throw ParseError(std::string("state file: ") + what + " is not a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError(std::string("state file: non-finite ") + what);
  }
  return v;
}

cxd complex_pair(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(std::string("state file: ") + what +
                     " must be a [re, im] pair");
  }
  return cxd(finite_number(j[0], what), finite_number(j[1], what));
}

DimSpec parse_dims(const nlohmann::json& root) {
  if (!root.contains("dims") || !root["dims"].is_array() || root["dims"].empty()) {
    throw ParseError("state file: missing or invalid \"dims\"");
  }
  std::vector<int> dims;
  for (const auto& d : root["dims"]) {
    if (!d.is_number_integer()) {
      throw ParseError("state file: dims entries must be integers");
    }
    dims.push_back(d.get<int>());
  }
  try {
    return DimSpec(std::move(dims));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
}

}  // namespace

LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("state file: cannot open " + path);
  }
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("state file: invalid JSON in " + path + ": " + e.what());
  }
  if (!root.is_object()) {
    throw ParseError("state file: top level must be an object");
  }

  LoadedState loaded;
  const DimSpec dims = parse_dims(root);
  const long total = dims.total_dim();
  loaded.meta = root.value("meta", nlohmann::json::object());

  const bool has_amps = root.contains("amplitudes");
  const bool has_density = root.contains("density");
  if (has_amps == has_density) {
    throw ParseError(
        "state file: exactly one of \"amplitudes\" or \"density\" required");
  }

  if (has_amps) {
    const auto& amps = root["amplitudes"];
    if (!amps.is_array() || static_cast<long>(amps.size()) != total) {
      throw ParseError("state file: amplitude count does not match dims");
    }
    Eigen::VectorXcd v(total);
    for (long i = 0; i < total; ++i) {
      v[i] = complex_pair(amps[i], "amplitude");
    }
    loaded.vector = StateVector(dims, std::move(v));
  } else {
    const auto& rows = root["density"];
    if (!rows.is_array() || static_cast<long>(rows.size()) != total) {
      throw ParseError("state file: density row count does not match dims");
    }
    Eigen::MatrixXcd m(total, total);
    for (long r = 0; r < total; ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || static_cast<long>(row.size()) != total) {
        throw ParseError("state file: density column count does not match dims");
      }
      for (long c = 0; c < total; ++c) {
        m(r, c) = complex_pair(row[c], "density entry");
      }
    }
    loaded.density = DensityMatrix(dims, std::move(m));
  }
  return loaded;
}

StateVector load_state_vector(const std::string& path) {
  LoadedState loaded = load_state_file(path);
  if (!loaded.vector) {
    throw ParseError("state file: " + path + " holds a density matrix, not a state vector");
  }
  return *std::move(loaded.vector);
}

void save_state_file(const std::string& path, const StateVector& state,
                     const nlohmann::json& meta) {
  nlohmann::json root;
  root["dims"] = state.dims().dims();
  nlohmann::json amps = nlohmann::json::array();
  for (long i = 0; i < state.amplitudes().size(); ++i) {
    const cxd a = state.amplitudes()[i];
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ParseError("save_state_file: non-finite amplitude");
    }
    amps.push_back({a.real(), a.imag()});
  }
  root["amplitudes"] = std::move(amps);
  if (!meta.empty()) {
    root["meta"] = meta;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_state_file: cannot write " + path);
  }
  out << root.dump(2) << "\n";
}

}  // namespace weylkit
