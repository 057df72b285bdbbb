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

#ifndef THERMCOH_EXPERIMENT_HPP_
#define THERMCOH_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace thermcoh {

enum class Command { bound_sweep, protocol, tradeoff, nogo, oracle_certify };
enum class OutputFormat { csv, json };

/// Fully resolved description of one experiment run. `energies` carries one
/// ascending list per subsystem; a single entry means one plain system.
/// Every run writes one table (CSV or JSON) plus a sidecar JSON echoing the
/// resolved spec and seed, so results are reproducible byte for byte.
struct ExperimentSpec {
  Command command = Command::bound_sweep;
  std::vector<std::vector<double>> energies;
  double beta = 1.0;
  bool beta_infinite = false;  // infinite-temperature source
  double delta_e = 0.0;
  bool budget_max = false;  // resolve the budget to the full available span
  int grid = 1;
  int samples = 10000;
  int restarts = 4;
  int attempts = 64;
  double energy_window = 1e-3;
  std::string objective = "coherence";  // oracle-certify: coherence | correlation
  std::string output_path;              // default: "<command>.csv" / ".json"
  OutputFormat format = OutputFormat::csv;
  std::uint64_t seed = 1;
};

const char* command_name(Command command);

/// Executes the experiment. Exit codes: 0 success, 2 validation error,
/// 3 numerical failure, 4 file I/O error. Diagnostics go to stderr.
int run(const ExperimentSpec& spec);

}  // namespace thermcoh

#endif  // THERMCOH_EXPERIMENT_HPP_
