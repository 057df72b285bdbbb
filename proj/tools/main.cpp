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

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thermcoh/experiment.hpp"

namespace {

using thermcoh::Command;
using thermcoh::ExperimentSpec;
using thermcoh::OutputFormat;

// "0,1;0,1" -> one ascending energy list per subsystem.
std::vector<std::vector<double>> parse_energies(const std::string& text) {
  std::vector<std::vector<double>> lists;
  std::stringstream outer(text);
  std::string part;
  while (std::getline(outer, part, ';')) {
    std::vector<double> list;
    std::stringstream inner(part);
    std::string token;
    while (std::getline(inner, token, ',')) {
      list.push_back(std::stod(token));
    }
    lists.push_back(std::move(list));
  }
  return lists;
}

void add_common_options(CLI::App* cmd, ExperimentSpec& spec, std::string& energies,
                        std::string& beta, std::string& delta_e, std::string& format) {
  cmd->add_option("--energies", energies,
                  "Energy levels, comma separated; subsystems split by ';'")
      ->required();
  cmd->add_option("--beta", beta, "Inverse temperature (>= 0), or 'inf'");
  cmd->add_option("--delta-e", delta_e, "Energy budget, or 'max'");
  cmd->add_option("--out", spec.output_path, "Output table path");
  cmd->add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", spec.seed, "Random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence-from-thermal-states toolkit"};
  app.require_subcommand(1);

  ExperimentSpec spec;
  std::string energies;
  std::string beta = "1";
  std::string delta_e = "max";
  std::string format = "csv";
  double e_a = 1.0;
  double e_b = 1.0;

  CLI::App* sweep = app.add_subcommand(
      "bound-sweep", "Coherence ceiling and synthesized protocol over a budget grid");
  add_common_options(sweep, spec, energies, beta, delta_e, format);
  sweep->add_option("--grid", spec.grid, "Number of budget points");

  CLI::App* protocol = app.add_subcommand(
      "protocol", "Rotation plan reaching the budgeted coherence optimum");
  add_common_options(protocol, spec, energies, beta, delta_e, format);

  CLI::App* tradeoff = app.add_subcommand(
      "tradeoff", "Coherence vs total correlation on a composite system");
  add_common_options(tradeoff, spec, energies, beta, delta_e, format);
  tradeoff->add_option("--grid", spec.grid, "Number of budget points");

  CLI::App* nogo = app.add_subcommand(
      "nogo", "Search for simultaneous thermal diagonal and thermal marginals");
  nogo->add_option("--eA", e_a, "Gap of qubit A")->required();
  nogo->add_option("--eB", e_b, "Gap of qubit B")->required();
  nogo->add_option("--beta", beta, "Inverse temperature (> 0)");
  nogo->add_option("--delta-e", delta_e, "Energy budget, or 'max'");
  nogo->add_option("--attempts", spec.attempts, "Multi-start attempts");
  nogo->add_option("--out", spec.output_path, "Output table path");
  nogo->add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  nogo->add_option("--seed", spec.seed, "Random seed");

  CLI::App* certify = app.add_subcommand(
      "oracle-certify", "Haar sampling plus refinement against the analytic bounds");
  add_common_options(certify, spec, energies, beta, delta_e, format);
  certify->add_option("--objective", spec.objective,
                      "Objective: coherence or correlation")
      ->check(CLI::IsMember({"coherence", "correlation"}));
  certify->add_option("--samples", spec.samples, "Haar samples");
  certify->add_option("--restarts", spec.restarts, "Refinement restarts");
  certify->add_option("--window", spec.energy_window, "Energy admissibility window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (sweep->parsed()) spec.command = Command::bound_sweep;
    if (protocol->parsed()) spec.command = Command::protocol;
    if (tradeoff->parsed()) spec.command = Command::tradeoff;
    if (nogo->parsed()) {
      spec.command = Command::nogo;
      spec.energies = {{0.0, e_a}, {0.0, e_b}};
    } else {
      spec.energies = parse_energies(energies);
    }
    if (certify->parsed()) spec.command = Command::oracle_certify;

    if (beta == "inf") {
      spec.beta_infinite = true;
      spec.beta = 0.0;
    } else {
      spec.beta = std::stod(beta);
    }
    if (delta_e == "max") {
      spec.budget_max = true;
    } else {
      spec.delta_e = std::stod(delta_e);
    }
    spec.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  } catch (const std::exception& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  }

  return thermcoh::run(spec);
}
