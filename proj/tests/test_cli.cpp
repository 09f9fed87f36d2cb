#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI under test (path from WEYLKIT_CLI) with the given argument
// string, capturing stdout, stderr and the exit code.
CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("WEYLKIT_CLI");
  REQUIRE(bin != nullptr);
  const std::string out_path = "/tmp/weylkit_cli_out.txt";
  const std::string err_path = "/tmp/weylkit_cli_err.txt";
  const std::string cmd = std::string(bin) + " " + args + " >" + out_path +
                          " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  return r;
}

nlohmann::json parse_record(const CliResult& r) {
  return nlohmann::json::parse(r.out);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

constexpr const char* kInvSqrt2 = "0.7071067811865476";

std::string t_state_file() {
  const std::string path = "/tmp/weylkit_cli_tstate.json";
  write_text(path, std::string(R"({"dims": [2], "amplitudes": [[)") +
                       kInvSqrt2 + R"(, 0.0], [0.5, 0.5]]})");
  return path;
}

std::string bell_file() {
  const std::string path = "/tmp/weylkit_cli_bell.json";
  write_text(path, std::string(R"({"dims": [2, 2], "amplitudes": [[)") +
                       kInvSqrt2 + R"(, 0.0], [0.0, 0.0], [0.0, 0.0], [)" +
                       kInvSqrt2 + R"(, 0.0]]})");
  return path;
}

std::string product_file() {
  const std::string path = "/tmp/weylkit_cli_product.json";
  write_text(path, R"({"dims": [2, 2], "amplitudes":
      [[0.6, 0.0], [0.0, 0.0], [0.8, 0.0], [0.0, 0.0]]})");
  return path;
}

std::string classical_density_file() {
  const std::string path = "/tmp/weylkit_cli_density.json";
  write_text(path, R"({"dims": [2, 2], "density": [
      [[0.5, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
      [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
      [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
      [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.5, 0.0]]]})");
  return path;
}

}  // namespace

TEST_CASE("magic of the T state is ln(4/3)") {
  const CliResult r = run_cli("magic " + t_state_file());
  REQUIRE(r.exit_code == 0);
  const nlohmann::json rec = parse_record(r);
  CHECK(rec.at("command") == "magic");
  CHECK(std::abs(rec.at("values").at("m_alpha").get<double>() -
                 std::log(4.0 / 3.0)) < 1e-10);
}

TEST_CASE("magic supports the Shannon limit and sampling diagnostics") {
  const std::string state = t_state_file();

  const CliResult shannon = run_cli("magic " + state + " --alpha 1");
  REQUIRE(shannon.exit_code == 0);
  const double want_shannon = 0.5 * std::log(2.0);  // p = {1/2, 1/4, 1/4}
  CHECK(std::abs(parse_record(shannon).at("values").at("m_alpha").get<double>() -
                 want_shannon) < 1e-10);

  const CliResult mc = run_cli("magic " + state + " --samples 2000 --seed 7");
  REQUIRE(mc.exit_code == 0);
  const nlohmann::json rec = parse_record(mc);
  CHECK(rec.at("values").contains("purity_sum_estimate"));
  CHECK(rec.at("values").contains("purity_std_error"));
  CHECK(rec.at("values").contains("m2_from_samples"));
  const double est = rec.at("values").at("purity_sum_estimate").get<double>();
  const double se = rec.at("values").at("purity_std_error").get<double>();
  CHECK(std::abs(est - 3.0 / 8.0) < 5.0 * se + 1e-12);

  // --samples at another alpha is ignored with a warning.
  const CliResult off = run_cli("magic " + state + " --alpha 3 --samples 10");
  REQUIRE(off.exit_code == 0);
  CHECK(off.err.find("ignored") != std::string::npos);
  CHECK(!parse_record(off).at("values").contains("purity_sum_estimate"));
}

TEST_CASE("magic rejects alpha <= 0 with the precondition exit code") {
  const CliResult r = run_cli("magic " + t_state_file() + " --alpha 0");
  CHECK(r.exit_code == 3);
  CHECK(!r.err.empty());
}

TEST_CASE("renyi2 of the Bell state is ln 2 with matching oracle") {
  const CliResult r = run_cli("renyi2 " + bell_file() + " --partition 0");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json rec = parse_record(r);
  CHECK(std::abs(rec.at("values").at("renyi2_displacement").get<double>() -
                 std::log(2.0)) < 1e-9);
  CHECK(rec.at("values").at("difference").get<double>() < 1e-8);
  CHECK(rec.at("diagnostics").contains("purity_sum"));

  const CliResult bits =
      run_cli("renyi2 " + bell_file() + " --partition 0 --log2");
  REQUIRE(bits.exit_code == 0);
  CHECK(std::abs(parse_record(bits)
                     .at("values")
                     .at("renyi2_displacement")
                     .get<double>() -
                 1.0) < 1e-9);
}

TEST_CASE("renyi2 precondition failures exit with code 3") {
  const CliResult out_of_range =
      run_cli("renyi2 " + bell_file() + " --partition 5");
  CHECK(out_of_range.exit_code == 3);

  const CliResult empty_a = run_cli("renyi2 " + bell_file() + " --partition 0,1,2");
  CHECK(empty_a.exit_code == 3);
}

TEST_CASE("malformed state files exit with code 2") {
  const std::string path = "/tmp/weylkit_cli_broken.json";
  write_text(path, "{ this is not json");
  CHECK(run_cli("magic " + path).exit_code == 2);
  CHECK(run_cli("renyi2 " + path + " --partition 0").exit_code == 2);

  write_text(path, R"({"dims": [2], "amplitudes": [[1.0, 0.0]]})");
  CHECK(run_cli("magic " + path).exit_code == 2);

  CHECK(run_cli("magic /tmp/weylkit_cli_missing.json").exit_code == 2);
}

TEST_CASE("negativity: Bell pair 1/2, product zero, density files accepted") {
  const CliResult bell = run_cli("negativity " + bell_file() + " --partition 0");
  REQUIRE(bell.exit_code == 0);
  const nlohmann::json rec = parse_record(bell);
  CHECK(std::abs(rec.at("values").at("negativity").get<double>() - 0.5) <
        1e-10);
  CHECK(std::abs(rec.at("values").at("log_negativity").get<double>() -
                 std::log(2.0)) < 1e-10);
  CHECK(rec.at("diagnostics").at("pt_oracle_max_deviation").get<double>() <
        1e-10);

  const CliResult prod =
      run_cli("negativity " + product_file() + " --partition 0");
  REQUIRE(prod.exit_code == 0);
  CHECK(std::abs(parse_record(prod).at("values").at("negativity").get<double>()) <
        1e-10);

  const CliResult cls =
      run_cli("negativity " + classical_density_file() + " --partition 0");
  REQUIRE(cls.exit_code == 0);
  CHECK(std::abs(parse_record(cls).at("values").at("negativity").get<double>()) <
        1e-10);
}

TEST_CASE("verify passes at small dims and hits the budget at large ones") {
  const CliResult d2 = run_cli("verify --dims 2");
  CHECK(d2.exit_code == 0);
  CHECK(parse_record(d2).at("values").at("pass").get<bool>());

  const CliResult d33 = run_cli("verify --dims 3,3");
  CHECK(d33.exit_code == 0);
  CHECK(parse_record(d33).at("values").at("pass").get<bool>());

  const CliResult big = run_cli("verify --dims 50,50");
  CHECK(big.exit_code == 3);
}

TEST_CASE("output is byte-identical across repeated runs") {
  const std::string args = "renyi2 " + bell_file() + " --partition 0";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  const CliResult v1 = run_cli("verify --dims 2,2 --seed 5");
  const CliResult v2 = run_cli("verify --dims 2,2 --seed 5");
  CHECK(v1.out == v2.out);
}

TEST_CASE("cv weyl emits CSV; --at evaluates one point") {
  const CliResult at_zero = run_cli("cv weyl vacuum --cutoff 20 --at 0+0i");
  REQUIRE(at_zero.exit_code == 0);
  std::istringstream lines(at_zero.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "re_z,im_z,re_w,im_w,p");
  // W(0) = 1 for any normalized state.
  CHECK(row.rfind("0,0,1,0,", 0) == 0);

  const CliResult grid =
      run_cli("cv weyl coherent:0.5+0.25i --cutoff 20 --radius 1 --spacing 0.5");
  REQUIRE(grid.exit_code == 0);
  int rows = 0;
  std::istringstream all(grid.out);
  std::string line;
  while (std::getline(all, line)) ++rows;
  CHECK(rows > 4);  // header plus the nodes of the tiny grid
}

TEST_CASE("cv entropy of the vacuum approaches 1 + ln pi") {
  const CliResult r =
      run_cli("cv entropy vacuum --cutoff 30 --radius 6 --spacing 0.15");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json rec = parse_record(r);
  CHECK(std::abs(rec.at("values").at("entropy").get<double>() -
                 (1.0 + std::log(std::numbers::pi))) < 1e-2);
  const double norm = rec.at("diagnostics").at("normalization_check").get<double>();
  CHECK(norm > 0.999);
  CHECK(norm < 1.001);
}

TEST_CASE("cv entropy warns when the grid is inadequate but still exits 0") {
  const CliResult r =
      run_cli("cv entropy fock:2 --cutoff 20 --radius 1 --spacing 0.2");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("cv state specs validate") {
  CHECK(run_cli("cv entropy fock:50 --cutoff 20").exit_code == 3);
  CHECK(run_cli("cv entropy coherent:nonsense --cutoff 10").exit_code == 2);
  CHECK(run_cli("cv weyl /tmp/weylkit_cli_missing.json").exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("renyi2").exit_code == 2);          // missing state/partition
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
