// Copyright 2026 The thermcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thermcoh/experiment.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

using namespace thermcoh;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream cols(line);
    std::string cell;
    while (std::getline(cols, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

ExperimentSpec sweep_spec(const std::string& out) {
  ExperimentSpec spec;
  spec.command = Command::bound_sweep;
  spec.energies = {{0.0, 1.0}};
  spec.beta = 1.0986122886681098;  // populations (3/4, 1/4)
  spec.budget_max = true;
  spec.grid = 11;
  spec.output_path = out;
  return spec;
}

}  // namespace

TEST_CASE("spec validation failures exit with code 2") {
  ExperimentSpec spec;
  spec.command = Command::bound_sweep;
  CHECK(run(spec) == 2);  // no energies

  spec.energies = {{0.0, 1.0}};
  spec.grid = 0;
  CHECK(run(spec) == 2);

  ExperimentSpec nogo;
  nogo.command = Command::nogo;
  nogo.energies = {{0.0, 1.0, 2.0}, {0.0, 1.0}};
  CHECK(run(nogo) == 2);

  ExperimentSpec certify;
  certify.command = Command::oracle_certify;
  certify.energies = {{0.0, 1.0}};
  certify.objective = "entropy";
  CHECK(run(certify) == 2);
}

TEST_CASE("unwritable output exits with code 4") {
  ExperimentSpec spec = sweep_spec("/nonexistent-thermcoh-dir/out.csv");
  spec.grid = 2;
  CHECK(run(spec) == 4);
}

TEST_CASE("numerical failures exit with code 3") {
  ExperimentSpec spec;
  spec.command = Command::protocol;
  // Middle level below the thermal average: the qutrit protocol refuses.
  spec.energies = {{0.0, 0.05, 10.0}};
  spec.beta = 0.2;
  spec.delta_e = 0.01;
  spec.output_path = temp_file("thermcoh_invalid_protocol.csv").string();
  CHECK(run(spec) == 3);
}

TEST_CASE("bound sweep writes the documented table") {
  const auto out = temp_file("thermcoh_sweep.csv");
  CHECK(run(sweep_spec(out.string())) == 0);

  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 12);  // header + 11 grid points
  CHECK(rows[0] == std::vector<std::string>{"delta_e", "beta_prime", "bound_bits",
                                            "achieved_bits", "gap", "energy_err"});
  // First row is the idle budget, last row saturates the full ceiling.
  CHECK(std::stod(rows[1][0]) == doctest::Approx(0.0));
  CHECK(std::stod(rows[1][2]) == doctest::Approx(0.0));
  CHECK(std::stod(rows[11][0]) == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(std::stod(rows[11][1]) == doctest::Approx(0.0));  // infinite temperature
  CHECK(std::abs(std::stod(rows[11][4])) <= 1e-8);

  // Sidecar carries the resolved spec.
  const auto sidecar = nlohmann::json::parse(slurp(out.string() + ".meta.json"));
  CHECK(sidecar["seed"] == 1);
  CHECK(sidecar["version"] == "0.1.0");
  CHECK(sidecar["results_path"] == out.string());
  CHECK(sidecar["spec"]["command"] == "bound-sweep");
  CHECK(sidecar["spec"]["delta_e"] == "max");
}

TEST_CASE("protocol trace keeps angles in the first quadrant") {
  const auto out = temp_file("thermcoh_protocol.csv");
  ExperimentSpec spec;
  spec.command = Command::protocol;
  spec.energies = {{0.0, 1.0, 2.0}};
  spec.beta = 1.0;
  spec.delta_e = 0.2;
  spec.output_path = out.string();
  CHECK(run(spec) == 0);

  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 3);  // header + two rotations
  const double half_pi = 1.5707963267948966;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double angle = std::stod(rows[r][3]);
    CHECK(angle >= 0.0);
    CHECK(angle <= half_pi);
  }
  // The trace ends on the target diagonal.
  CHECK(std::stod(rows[2][6]) <= 1e-9);
}

TEST_CASE("tradeoff table keeps both ceilings equal") {
  const auto out = temp_file("thermcoh_tradeoff.csv");
  ExperimentSpec spec;
  spec.command = Command::tradeoff;
  spec.energies = {{0.0, 1.0}, {0.0, 1.0}};
  spec.beta = 1.0986122886681098;
  spec.delta_e = 0.3;
  spec.output_path = out.string();
  CHECK(run(spec) == 0);

  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 2);
  const double i_max = std::stod(rows[1][2]);
  const double c_max = std::stod(rows[1][3]);
  const double c_r = std::stod(rows[1][4]);
  const double i_val = std::stod(rows[1][5]);
  CHECK(std::abs(i_max - c_max) < 1e-10);
  CHECK(std::abs(c_r - c_max) < 1e-8);
  CHECK(i_val <= c_max + 1e-8);
}

TEST_CASE("json output format") {
  const auto out = temp_file("thermcoh_sweep.json");
  ExperimentSpec spec = sweep_spec(out.string());
  spec.format = OutputFormat::json;
  spec.grid = 3;
  CHECK(run(spec) == 0);

  const auto rows = nlohmann::json::parse(slurp(out));
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["delta_e"].get<double>() == doctest::Approx(0.0));
  CHECK(rows[2]["gap"].get<double>() <= 1e-8);
}

TEST_CASE("cli rejects unknown flags and reports usage") {
  const std::string cli = THERMCOH_CLI_PATH;
  const std::string null_out = " > /dev/null 2>&1";
  int status = std::system((cli + " bound-sweep --energies 0,1 --frobnicate 3" +
                            null_out).c_str());
  CHECK(WEXITSTATUS(status) == 2);
  status = std::system((cli + " --help" + null_out).c_str());
  CHECK(WEXITSTATUS(status) == 0);
  status = std::system((cli + null_out).c_str());  // a subcommand is required
  CHECK(WEXITSTATUS(status) != 0);
}

TEST_CASE("identical specs produce byte-identical tables") {
  const auto first = temp_file("thermcoh_det_a.csv");
  const auto second = temp_file("thermcoh_det_b.csv");

  CHECK(run(sweep_spec(first.string())) == 0);
  CHECK(run(sweep_spec(second.string())) == 0);
  CHECK(slurp(first) == slurp(second));

  ExperimentSpec certify;
  certify.command = Command::oracle_certify;
  certify.energies = {{0.0, 1.0, 2.0}};
  certify.beta = 1.0;
  certify.budget_max = true;
  certify.samples = 400;
  certify.restarts = 2;
  certify.seed = 9;
  certify.output_path = first.string();
  CHECK(run(certify) == 0);
  const std::string once = slurp(first);
  certify.output_path = second.string();
  CHECK(run(certify) == 0);
  CHECK(once == slurp(second));
}
