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
#include <cstdio>
#include <fstream>
#include <iostream>
#include <utility>

#include <json.hpp>

#include "thermcoh/correlation.hpp"

namespace thermcoh {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

// 12 significant digits keeps CSV diffs readable; JSON output carries the
// shortest round-trip representation of the full doubles instead.
std::string format_cell(const json& value) {
  if (value.is_number_float()) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value.get<double>());
    return buffer;
  }
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void write_table(const Table& table, const ExperimentSpec& spec,
                 const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw std::ios_base::failure("cannot open " + path);
  if (spec.format == OutputFormat::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << format_cell(row[c]);
      }
      out << "\n";
    }
  } else {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = row[c];
      rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << "\n";
  }
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

json spec_to_json(const ExperimentSpec& spec) {
  json j;
  j["command"] = command_name(spec.command);
  j["energies"] = spec.energies;
  if (spec.beta_infinite) {
    j["beta"] = "inf";
  } else {
    j["beta"] = spec.beta;
  }
  if (spec.budget_max) {
    j["delta_e"] = "max";
  } else {
    j["delta_e"] = spec.delta_e;
  }
  j["grid"] = spec.grid;
  j["samples"] = spec.samples;
  j["restarts"] = spec.restarts;
  j["attempts"] = spec.attempts;
  j["energy_window"] = spec.energy_window;
  j["objective"] = spec.objective;
  j["format"] = spec.format == OutputFormat::csv ? "csv" : "json";
  return j;
}

void write_sidecar(const ExperimentSpec& spec, const std::string& results_path) {
  json j;
  j["spec"] = spec_to_json(spec);
  j["seed"] = spec.seed;
  j["version"] = kVersion;
  j["results_path"] = results_path;
  const std::string path = results_path + ".meta.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << j.dump(2) << "\n";
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

void validate(const ExperimentSpec& spec) {
  if (spec.energies.empty()) throw Error("no energies given");
  for (const auto& list : spec.energies) {
    if (list.size() < 2) throw Error("each subsystem needs at least two levels");
  }
  if (!spec.beta_infinite && (!(spec.beta >= 0.0) || std::isnan(spec.beta))) {
    throw Error("beta must be >= 0 or 'inf'");
  }
  if (!spec.budget_max && (std::isnan(spec.delta_e) || spec.delta_e < 0.0)) {
    throw Error("delta-e must be >= 0 or 'max'");
  }
  if (spec.grid < 1) throw Error("grid must be >= 1");
  if (spec.samples < 1 || spec.restarts < 1 || spec.attempts < 1) {
    throw Error("samples, restarts and attempts must be >= 1");
  }
  if (!(spec.energy_window > 0.0)) throw Error("window must be > 0");
  if (spec.objective != "coherence" && spec.objective != "correlation") {
    throw Error("objective must be coherence or correlation");
  }
  switch (spec.command) {
    case Command::bound_sweep:
    case Command::protocol:
      if (spec.energies.size() != 1) {
        throw Error("this command takes a single energy list");
      }
      break;
    case Command::tradeoff:
      if (spec.energies.size() < 2) {
        throw Error("tradeoff needs a composite system (semicolon-separated lists)");
      }
      break;
    case Command::nogo:
      if (spec.energies.size() != 2 || spec.energies[0].size() != 2 ||
          spec.energies[1].size() != 2) {
        throw Error("nogo works on exactly two qubits");
      }
      break;
    case Command::oracle_certify:
      if (spec.objective == "correlation" && spec.energies.size() < 2) {
        throw Error("correlation certification needs a composite system");
      }
      if (spec.objective == "coherence" && spec.energies.size() != 1) {
        throw Error("coherence certification takes a single energy list");
      }
      break;
  }
}

InverseTemperature spec_beta(const ExperimentSpec& spec) {
  return spec.beta_infinite ? InverseTemperature::infinite_temperature()
                            : InverseTemperature(spec.beta);
}

double resolve_budget(const ExperimentSpec& spec, double w_max) {
  return spec.budget_max ? w_max : spec.delta_e;
}

Table run_bound_sweep(const ExperimentSpec& spec) {
  const Hamiltonian h(spec.energies[0]);
  const ThermalState t = gibbs_state(h, spec_beta(spec));
  const double w_max = t.max_energy_cost();
  const double top = resolve_budget(spec, w_max);

  Table table;
  table.columns = {"delta_e", "beta_prime", "bound_bits", "achieved_bits",
                   "gap",     "energy_err"};
  const int n = spec.grid;
  for (int i = 0; i < n; ++i) {
    const double delta_e = n == 1 ? top : top * i / (n - 1);
    const ConstrainedReport report =
        constrained_protocol(t, EnergyBudget::for_state(t, delta_e));
    table.rows.push_back({delta_e, report.target_beta_prime.value(), report.bound,
                          report.achieved_c_r, report.bound - report.achieved_c_r,
                          std::abs(report.achieved_energy - delta_e)});
  }
  return table;
}

Table run_protocol(const ExperimentSpec& spec) {
  const Hamiltonian h(spec.energies[0]);
  const ThermalState t = gibbs_state(h, spec_beta(spec));
  const EnergyBudget budget =
      EnergyBudget::for_state(t, resolve_budget(spec, t.max_energy_cost()));

  ConstrainedReport report = [&] {
    switch (h.dim()) {
      case 2:
        return qubit_protocol(t, budget);
      case 3:
        return qutrit_protocol(t, budget);
      default:
        return constrained_protocol(t, budget);
    }
  }();

  const RealVector target =
      gibbs_state(h, report.target_beta_prime).populations();
  Table table;
  table.columns = {"step",     "axis_j",       "axis_k",  "angle_rad",
                   "c_r_bits", "energy_spent", "diag_err"};
  std::vector<GivensStep> prefix;
  for (std::size_t s = 0; s < report.plan.steps.size(); ++s) {
    prefix.push_back(report.plan.steps[s]);
    const UnitaryMatrix partial =
        UnitaryMatrix(compose_givens(h.dim(), prefix).cast<Complex>());
    const DensityMatrix rho_s = conjugate(t.state(), partial);
    table.rows.push_back(
        {static_cast<int>(s + 1), report.plan.steps[s].j, report.plan.steps[s].k,
         report.plan.steps[s].angle, relative_entropy_of_coherence(rho_s),
         average_energy(rho_s, h) - t.average_energy(),
         (rho_s.populations() - target).cwiseAbs().maxCoeff()});
  }
  return table;
}

CompositeSystem spec_composite(const ExperimentSpec& spec) {
  std::vector<Hamiltonian> locals;
  locals.reserve(spec.energies.size());
  for (const auto& list : spec.energies) locals.emplace_back(list);
  return CompositeSystem(std::move(locals));
}

Table run_tradeoff(const ExperimentSpec& spec) {
  const CompositeSystem sys = spec_composite(spec);
  const InverseTemperature beta = spec_beta(spec);
  const double w_max = sys.joint_mean_energy() - sys.joint_average_energy(beta);
  const double top = resolve_budget(spec, w_max);

  Table table;
  table.columns = {"delta_e",  "beta_prime", "i_max_bits", "c_max_bits",
                   "c_r_bits", "i_bits",     "energy_err"};
  const RealVector initial = sys.joint_thermal_populations(beta);
  const int n = spec.grid;
  for (int i = 0; i < n; ++i) {
    const double delta_e = n == 1 ? top : top * i / (n - 1);
    const EnergyBudget budget = joint_budget(sys, beta, delta_e);
    const RotationPlan plan = joint_max_coherence_rotation(sys, beta, budget);
    const UnitaryMatrix u = plan.unitary();
    const ComparisonReport report =
        coherence_correlation_tradeoff(sys, beta, budget, u);
    const RealVector final_pops =
        conjugate(sys.joint_thermal_state(beta), u).populations();
    double cost = 0.0;
    for (int m = 0; m < sys.joint_dim(); ++m) {
      cost += sys.joint_energies()[m] * (final_pops[m] - initial[m]);
    }
    table.rows.push_back({delta_e, marginal_target_beta(sys, beta, budget).value(),
                          report.i_max, report.c_max, report.c_at_imax,
                          report.i_at_cmax, std::abs(cost - delta_e)});
  }
  return table;
}

Table run_nogo(const ExperimentSpec& spec) {
  const CompositeSystem sys = spec_composite(spec);
  const InverseTemperature beta = spec_beta(spec);
  const EnergyBudget budget =
      joint_budget(sys, beta,
                   resolve_budget(spec, sys.joint_mean_energy() -
                                            sys.joint_average_energy(beta)));
  NogoConfig cfg;
  cfg.attempts = spec.attempts;
  cfg.seed = spec.seed;
  const NogoReport report = verify_two_qubit_nogo(sys, beta, budget, cfg);

  Table table;
  table.columns = {"e_a",      "e_b",           "beta",       "delta_e",
                   "attempts", "min_deviation", "energy_err", "evaluations"};
  table.rows.push_back({sys.local(0).span(), sys.local(1).span(), beta.value(),
                        budget.delta_e(), spec.attempts, report.min_deviation,
                        report.energy_error, report.evaluations});
  return table;
}

Table run_oracle_certify(const ExperimentSpec& spec) {
  Table table;
  table.columns = {"objective",   "dim",       "beta",        "delta_e",
                   "bound_bits",  "best_bits", "excess_bits", "admissible_fraction",
                   "evaluations"};
  SearchConfig cfg;
  cfg.samples = spec.samples;
  cfg.restarts = spec.restarts;
  cfg.seed = spec.seed;
  cfg.energy_window = spec.energy_window;
  const InverseTemperature beta = spec_beta(spec);

  if (spec.objective == "coherence") {
    const Hamiltonian h(spec.energies[0]);
    const ThermalState t = gibbs_state(h, beta);
    double bound = 0.0;
    double delta_e = 0.0;
    CostPredicate admissible;
    if (spec.budget_max) {
      // Unconstrained: every unitary is admissible, the ceiling is log2 d - S.
      bound = std::log2(static_cast<double>(h.dim())) - t.entropy_bits();
      delta_e = t.max_energy_cost();
      admissible = [](double) { return true; };
    } else {
      const EnergyBudget budget = EnergyBudget::for_state(t, spec.delta_e);
      bound = constrained_bound(t, budget).bits;
      delta_e = budget.delta_e();
      const double window = cfg.energy_window;
      admissible = [delta_e, window](double cost) {
        return cost <= delta_e && cost >= delta_e - window;
      };
    }
    const SearchResult result = maximize_over_unitaries(
        [](const DensityMatrix& rho) { return relative_entropy_of_coherence(rho); }, t,
        admissible, cfg);
    table.rows.push_back({spec.objective, h.dim(), beta.value(), delta_e, bound,
                          result.best_value, result.best_value - bound,
                          result.admissible_fraction, result.evaluations});
    return table;
  }

  const CompositeSystem sys = spec_composite(spec);
  const EnergyBudget budget =
      joint_budget(sys, beta,
                   resolve_budget(spec, sys.joint_mean_energy() -
                                            sys.joint_average_energy(beta)));
  const double bound = max_correlation_bound(sys, beta, budget);
  const double delta_e = budget.delta_e();
  const double window = cfg.energy_window;
  const SearchResult result = maximize_over_unitaries_diagonal(
      [&sys](const DensityMatrix& rho) { return mutual_information(rho, sys); },
      sys.joint_thermal_populations(beta), sys.joint_energies(),
      [delta_e, window](double cost) {
        return cost <= delta_e && cost >= delta_e - window;
      },
      cfg);
  table.rows.push_back({spec.objective, sys.joint_dim(), beta.value(), delta_e, bound,
                        result.best_value, result.best_value - bound,
                        result.admissible_fraction, result.evaluations});
  return table;
}

}  // namespace

const char* command_name(Command command) {
  switch (command) {
    case Command::bound_sweep:
      return "bound-sweep";
    case Command::protocol:
      return "protocol";
    case Command::tradeoff:
      return "tradeoff";
    case Command::nogo:
      return "nogo";
    case Command::oracle_certify:
      return "oracle-certify";
  }
  return "unknown";
}

int run(const ExperimentSpec& spec_in) {
  ExperimentSpec spec = spec_in;
  try {
    validate(spec);
  } catch (const std::exception& e) {
    std::cerr << "invalid experiment spec: " << e.what() << "\n";
    return 2;
  }
  if (spec.output_path.empty()) {
    spec.output_path = std::string(command_name(spec.command)) +
                       (spec.format == OutputFormat::csv ? ".csv" : ".json");
  }

  Table table;
  try {
    switch (spec.command) {
      case Command::bound_sweep:
        table = run_bound_sweep(spec);
        break;
      case Command::protocol:
        table = run_protocol(spec);
        break;
      case Command::tradeoff:
        table = run_tradeoff(spec);
        break;
      case Command::nogo:
        table = run_nogo(spec);
        break;
      case Command::oracle_certify:
        table = run_oracle_certify(spec);
        break;
    }
  } catch (const std::exception& e) {
    std::cerr << "experiment failed: " << e.what() << "\n";
    return 3;
  }

  try {
    write_table(table, spec, spec.output_path);
    write_sidecar(spec, spec.output_path);
  } catch (const std::exception& e) {
    std::cerr << "output failed: " << e.what() << "\n";
    return 4;
  }
  std::cout << command_name(spec.command) << ": wrote " << table.rows.size()
            << " rows to " << spec.output_path << "\n";
  return 0;
}

}  // namespace thermcoh
