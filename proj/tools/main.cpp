// weylkit: displacement-algebra measures for qudit registers and truncated
// CV modes. One subcommand per measure; JSON records on stdout, warnings on
// stderr. Exit codes: 0 ok, 1 verification failure, 2 parse error,
// 3 precondition/budget error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylkit/cv.hpp"
#include "weylkit/displacement.hpp"
#include "weylkit/entanglement.hpp"
#include "weylkit/magic.hpp"
#include "weylkit/state.hpp"
#include "weylkit/statefile.hpp"
#include "weylkit/swap.hpp"

namespace {

using nlohmann::json;
using namespace weylkit;

constexpr double kLn2 = std::numbers::ln2;

double parse_double_strict(const std::string& s, const char* what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("cannot parse ") + what + ": '" + s + "'");
  }
  if (pos != s.size() || !std::isfinite(v)) {
    throw ParseError(std::string("cannot parse ") + what + ": '" + s + "'");
  }
  return v;
}

// Complex literals: "1", "-0.5", "1+2i", "0.5-0.3i", "2i", "i", "-i".
cxd parse_complex(std::string s, const char* what = "complex number") {
  if (s.empty()) throw ParseError(std::string("empty ") + what);
  if (s.back() != 'i') return cxd(parse_double_strict(s, what), 0.0);
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    if (s.empty() || s == "+") return cxd(0.0, 1.0);
    if (s == "-") return cxd(0.0, -1.0);
    return cxd(0.0, parse_double_strict(s, what));
  }
  const double re = parse_double_strict(s.substr(0, split), what);
  const std::string im = s.substr(split);
  if (im == "+") return cxd(re, 1.0);
  if (im == "-") return cxd(re, -1.0);
  return cxd(re, parse_double_strict(im, what));
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string tok =
        s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError(std::string("cannot parse ") + what + ": '" + s + "'");
    }
    if (pos != tok.size()) {
      throw ParseError(std::string("cannot parse ") + what + ": '" + s + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw ParseError(std::string("empty ") + what);
  return out;
}

void emit(const json& record) { std::cout << record.dump(2) << "\n"; }

double in_base(double nats, bool log2) { return log2 ? nats / kLn2 : nats; }

json base_record(const std::string& command) {
  json rec;
  rec["command"] = command;
  rec["params"] = json::object();
  rec["values"] = json::object();
  rec["diagnostics"] = json::object();
  return rec;
}

// ---- cv state specs --------------------------------------------------------

struct CvInput {
  StateVector state;
  json diagnostics;
};

CvInput make_cv_state(const std::string& spec, int cutoff) {
  if (cutoff < 1) {
    throw std::invalid_argument("cutoff must be >= 1");
  }
  json diag = json::object();
  if (spec == "vacuum") {
    return {StateVector::basis_state(DimSpec({cutoff + 1}), 0L), diag};
  }
  if (spec.rfind("coherent:", 0) == 0) {
    const cxd w = parse_complex(spec.substr(9), "coherent amplitude");
    CoherentResult r = coherent_state(FockMode(cutoff), w);
    diag["truncation_deficit"] = r.truncation_deficit;
    return {std::move(r.state), diag};
  }
  if (spec.rfind("fock:", 0) == 0) {
    const std::string level = spec.substr(5);
    std::size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(level, &pos);
    } catch (const std::exception&) {
      throw ParseError("cannot parse fock level: '" + level + "'");
    }
    if (pos != level.size() || n < 0) {
      throw ParseError("cannot parse fock level: '" + level + "'");
    }
    if (n > cutoff) {
      throw std::invalid_argument("fock level exceeds the cutoff");
    }
    return {StateVector::basis_state(DimSpec({cutoff + 1}), static_cast<long>(n)),
            diag};
  }
  // Anything else is a state-file path; its dims define the truncation.
  return {load_state_vector(spec), diag};
}

// ---- subcommand bodies ------------------------------------------------------

int run_magic(const std::string& path, double alpha, std::optional<long> samples,
              std::uint64_t seed, bool log2) {
  const StateVector state = load_state_vector(path);
  json rec = base_record("magic");
  rec["params"] = {{"state", path},
                   {"alpha", alpha},
                   {"log_base", log2 ? "2" : "e"}};

  const double m_alpha = (alpha == 1.0) ? stabilizer_renyi_shannon(state)
                                        : stabilizer_renyi(state, alpha);
  rec["values"]["m_alpha"] = in_base(m_alpha, log2);

  if (samples) {
    if (alpha == 2.0) {
      rec["params"]["samples"] = *samples;
      rec["params"]["seed"] = seed;
      const PurityEstimate est = purity_estimator(state, *samples, seed);
      rec["values"]["purity_sum_estimate"] = est.estimate;
      rec["values"]["purity_std_error"] = est.std_error;
      if (est.estimate > 0.0) {
        const double m2 =
            -std::log(est.estimate) -
            std::log(static_cast<double>(state.dims().total_dim()));
        rec["values"]["m2_from_samples"] = in_base(m2, log2);
      }
    } else {
      std::cerr << "warning: --samples only applies at alpha = 2; ignored\n";
    }
  }
  emit(rec);
  return 0;
}

int run_renyi2(const std::string& path, const std::string& partition, bool log2) {
  const StateVector state = load_state_vector(path);
  const Partition part(parse_int_list(partition, "partition"),
                       state.dims().size());
  json rec = base_record("renyi2");
  rec["params"] = {{"state", path},
                   {"partition", part.positions()},
                   {"log_base", log2 ? "2" : "e"}};

  Renyi2Diagnostics diag;
  const double s2_disp = renyi2_displacement(state, part, &diag);
  const double s2_oracle = renyi2_oracle(state, part);
  rec["values"]["renyi2_displacement"] = in_base(s2_disp, log2);
  rec["values"]["renyi2_oracle"] = in_base(s2_oracle, log2);
  rec["values"]["difference"] = in_base(std::abs(s2_disp - s2_oracle), log2);
  rec["diagnostics"]["purity_sum"] = diag.purity_sum;
  if (diag.clamped) {
    rec["diagnostics"]["purity_clamped"] = true;
    std::cerr << "warning: purity sum clamped at 1e-12 before the log\n";
  }
  emit(rec);
  return 0;
}

int run_negativity(const std::string& path, const std::string& partition,
                   bool log2) {
  const LoadedState loaded = load_state_file(path);
  DensityMatrix rho = [&]() {
    if (loaded.vector) {
      if (!loaded.vector->is_normalized()) {
        throw std::invalid_argument("negativity: state vector is not normalized");
      }
      return DensityMatrix::pure(*loaded.vector);
    }
    return *loaded.density;
  }();
  if (std::abs(rho.trace() - cxd(1.0, 0.0)) > 1e-8) {
    std::cerr << "warning: density matrix trace differs from 1\n";
  }
  const Partition part(parse_int_list(partition, "partition"),
                       rho.dims().size());

  json rec = base_record("negativity");
  rec["params"] = {{"state", path},
                   {"partition", part.positions()},
                   {"log_base", log2 ? "2" : "e"}};

  const NegativityResult res = negativity(rho, part);
  rec["values"]["negativity"] = res.negativity;
  rec["values"]["log_negativity"] = in_base(res.log_negativity, log2);

  const DensityMatrix pt = partial_transpose(rho, part);
  const DensityMatrix pt_direct = partial_transpose_direct(rho, part);
  rec["diagnostics"]["pt_oracle_max_deviation"] =
      (pt.entries() - pt_direct.entries()).cwiseAbs().maxCoeff();
  emit(rec);
  return 0;
}

int run_cv_weyl(const std::string& spec, int cutoff, double radius,
                double spacing, const std::optional<std::string>& at) {
  const CvInput input = make_cv_state(spec, cutoff);
  if (input.state.dims().size() != 1) {
    throw std::invalid_argument("cv weyl: a single-mode state is required");
  }
  std::vector<cxd> points;
  if (at) {
    points.push_back(parse_complex(*at, "--at point"));
  } else {
    const QuadratureGrid grid = QuadratureGrid::make(radius, spacing);
    points = grid.nodes;
  }
  std::printf("re_z,im_z,re_w,im_w,p\n");
  for (const cxd z : points) {
    const cxd w = weyl_function(input.state, {z});
    const double p = std::norm(w) / std::numbers::pi;
    std::printf("%.12g,%.12g,%.12g,%.12g,%.12g\n", z.real(), z.imag(), w.real(),
                w.imag(), p);
  }
  return 0;
}

int run_cv_entropy(const std::string& spec, int cutoff, double radius,
                   double spacing, bool log2) {
  const CvInput input = make_cv_state(spec, cutoff);
  const QuadratureGrid grid = QuadratureGrid::make(radius, spacing);
  const std::vector<QuadratureGrid> grids(input.state.dims().size(), grid);
  const WeylEntropyResult res = weyl_entropy(input.state, grids);

  json rec = base_record("cv entropy");
  rec["params"] = {{"state", spec},
                   {"cutoff", static_cast<int>(input.state.dims().dim(0)) - 1},
                   {"radius", radius},
                   {"spacing", spacing},
                   {"log_base", log2 ? "2" : "e"}};
  rec["values"]["entropy"] = in_base(res.entropy, log2);
  rec["diagnostics"] = input.diagnostics;
  rec["diagnostics"]["normalization_check"] = res.normalization_check;
  if (std::abs(res.normalization_check - 1.0) > 1e-3) {
    std::cerr << "warning: quadrature normalization "
              << res.normalization_check
              << " is far from 1; enlarge --radius or refine --spacing\n";
  }
  emit(rec);
  return 0;
}

int run_cv_swapcheck(int cutoff, double radius, double spacing) {
  const FockMode mode(cutoff);
  const QuadratureGrid grid = QuadratureGrid::make(radius, spacing);
  const Eigen::MatrixXcd s = cv_swap_quadrature(mode, grid);

  const long dim = mode.dim();
  const long half = cutoff / 2;
  double fro = 0.0, max_dev = 0.0;
  for (long i = 0; i <= half; ++i) {
    for (long m = 0; m <= half; ++m) {
      for (long j = 0; j <= half; ++j) {
        for (long n = 0; n <= half; ++n) {
          const double want = (i == n && m == j) ? 1.0 : 0.0;
          const double dev = std::abs(s(i * dim + m, j * dim + n) - want);
          fro += dev * dev;
          max_dev = std::max(max_dev, dev);
        }
      }
    }
  }
  json rec = base_record("cv swapcheck");
  rec["params"] = {{"cutoff", cutoff}, {"radius", radius}, {"spacing", spacing}};
  rec["values"]["block_frobenius_error"] = std::sqrt(fro);
  rec["values"]["block_max_error"] = max_dev;
  rec["diagnostics"]["block_cutoff"] = half;
  rec["diagnostics"]["grid_nodes"] = grid.nodes.size();
  emit(rec);
  return 0;
}

int run_verify(const std::string& dims_flag, std::uint64_t seed) {
  const DimSpec dims(parse_int_list(dims_flag, "dims"));
  const long total = dims.total_dim();
  constexpr int kTrials = 5;

  json rec = base_record("verify");
  rec["params"] = {{"dims", dims.dims()}, {"seed", seed}};

  const double swap_dev =
      (swap_by_displacements(dims) - exact_swap(dims)).cwiseAbs().maxCoeff();

  double transpose_dev = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    // An arbitrary complex matrix exercises the transpose identity fully.
    const StateVector re = random_state(dims, seed + 2 * t);
    const StateVector im = random_state(dims, seed + 2 * t + 1);
    Eigen::MatrixXcd m(total, total);
    for (long r = 0; r < total; ++r) {
      for (long c = 0; c < total; ++c) {
        m(r, c) = re.amplitudes()[r] * im.amplitudes()[c] +
                  cxd(0.0, 1.0) * im.amplitudes()[r] * re.amplitudes()[c];
      }
    }
    const DensityMatrix rho(dims, m);
    const DensityMatrix rt = transpose_by_displacements(rho);
    transpose_dev = std::max(
        transpose_dev,
        (rt.entries() - rho.entries().transpose().eval()).cwiseAbs().maxCoeff());
  }

  double norm_dev = 0.0, cross_dev = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    const StateVector psi = random_state(dims, seed + 100 + t);
    const StateVector phi = random_state(dims, seed + 200 + t);
    norm_dev = std::max(
        norm_dev, std::abs(displacement_distribution(psi).weights.sum() - 1.0));
    cross_dev = std::max(cross_dev, std::abs(cross_fidelity(psi, phi) -
                                             std::norm(inner(psi, phi))));
  }

  const bool pass = swap_dev < 1e-10 && transpose_dev < 1e-10 &&
                    norm_dev < 1e-9 && cross_dev < 1e-9;
  rec["values"] = {{"swap_max_deviation", swap_dev},
                   {"transpose_max_deviation", transpose_dev},
                   {"normalization_max_deviation", norm_dev},
                   {"cross_fidelity_max_deviation", cross_dev},
                   {"pass", pass}};
  rec["diagnostics"] = {{"tolerance_swap", 1e-10},
                        {"tolerance_transpose", 1e-10},
                        {"tolerance_normalization", 1e-9},
                        {"tolerance_cross_fidelity", 1e-9},
                        {"trials", kTrials}};
  emit(rec);
  return pass ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{
      "weylkit: displacement-operator measures for qudits and truncated CV "
      "modes"};
  app.require_subcommand(1);

  std::string state_path, partition, cv_spec;
  double alpha = 2.0;
  std::optional<long> samples;
  std::uint64_t seed = 1;
  bool log2 = false;
  int cutoff = 40;
  double radius = 6.0, spacing = 0.1;
  std::optional<std::string> at;
  std::string dims_flag = "2";

  CLI::App* magic = app.add_subcommand(
      "magic", "Stabilizer Renyi entropy M_alpha of a state file");
  magic->add_option("state", state_path, "state-vector JSON file")->required();
  magic->add_option("--alpha", alpha, "Renyi order, > 0 (1 = Shannon limit)");
  long samples_value = 0;
  CLI::Option* samples_opt = magic->add_option(
      "--samples", samples_value, "Monte-Carlo purity samples (alpha = 2 only)");
  magic->add_option("--seed", seed, "sampling seed");
  magic->add_flag("--log2", log2, "report entropies in bits");

  CLI::App* renyi2 = app.add_subcommand(
      "renyi2", "Second Renyi entanglement entropy of subsystem A");
  renyi2->add_option("state", state_path, "state-vector JSON file")->required();
  renyi2->add_option("--partition", partition, "comma-separated qudit indices of A")
      ->required();
  renyi2->add_flag("--log2", log2, "report entropies in bits");

  CLI::App* neg = app.add_subcommand(
      "negativity", "Negativity across the cut (A | complement)");
  neg->add_option("state", state_path, "state-vector or density JSON file")
      ->required();
  neg->add_option("--partition", partition, "comma-separated qudit indices of A")
      ->required();
  neg->add_flag("--log2", log2, "report log-negativity in bits");

  CLI::App* cv = app.add_subcommand("cv", "Truncated CV-mode measures");
  cv->require_subcommand(1);
  const std::string spec_help =
      "state spec: vacuum | coherent:RE+IMi | fock:N | file path";

  CLI::App* cv_weyl = cv->add_subcommand(
      "weyl", "Weyl function on a grid (CSV to stdout)");
  cv_weyl->add_option("state", cv_spec, spec_help)->required();
  cv_weyl->add_option("--cutoff", cutoff, "Fock cutoff N_c");
  cv_weyl->add_option("--radius", radius, "grid radius");
  cv_weyl->add_option("--spacing", spacing, "grid spacing");
  std::string at_value;
  CLI::Option* at_opt =
      cv_weyl->add_option("--at", at_value, "evaluate at one point instead");

  CLI::App* cv_entropy = cv->add_subcommand(
      "entropy", "Differential entropy of the Weyl distribution");
  cv_entropy->add_option("state", cv_spec, spec_help)->required();
  cv_entropy->add_option("--cutoff", cutoff, "Fock cutoff N_c");
  cv_entropy->add_option("--radius", radius, "grid radius");
  cv_entropy->add_option("--spacing", spacing, "grid spacing");
  cv_entropy->add_flag("--log2", log2, "report entropy in bits");

  CLI::App* cv_swapcheck = cv->add_subcommand(
      "swapcheck", "Quadrature SWAP vs the exact permutation on the low block");
  cv_swapcheck->add_option("--cutoff", cutoff, "Fock cutoff N_c")
      ->default_val(24);
  cv_swapcheck->add_option("--radius", radius, "grid radius");
  cv_swapcheck->add_option("--spacing", spacing, "grid spacing")
      ->default_val(0.15);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the identity cross-checks at the given dims");
  verify->add_option("--dims", dims_flag, "comma-separated local dimensions");
  verify->add_option("--seed", seed, "seed for the random battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (samples_opt->count() > 0) samples = samples_value;
  if (at_opt->count() > 0) at = at_value;

  if (app.got_subcommand(magic)) {
    return run_magic(state_path, alpha, samples, seed, log2);
  }
  if (app.got_subcommand(renyi2)) {
    return run_renyi2(state_path, partition, log2);
  }
  if (app.got_subcommand(neg)) {
    return run_negativity(state_path, partition, log2);
  }
  if (app.got_subcommand(cv)) {
    if (cv->got_subcommand(cv_weyl)) {
      return run_cv_weyl(cv_spec, cutoff, radius, spacing, at);
    }
    if (cv->got_subcommand(cv_entropy)) {
      return run_cv_entropy(cv_spec, cutoff, radius, spacing, log2);
    }
    return run_cv_swapcheck(cutoff, radius, spacing);
  }
  return run_verify(dims_flag, seed);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const weylkit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
