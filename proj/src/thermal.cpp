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

#include "thermcoh/thermal.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace thermcoh {

Hamiltonian::Hamiltonian(std::vector<double> energies) {
  const int d = static_cast<int>(energies.size());
  if (d < 2 || d > kMaxDim) {
    throw InvalidDimension("Hamiltonian: dimension must be in [2, " +
                           std::to_string(kMaxDim) + "], got " + std::to_string(d));
  }
  for (int j = 0; j < d; ++j) {
    if (!std::isfinite(energies[j])) {
      throw InvalidState("Hamiltonian: non-finite energy at level " + std::to_string(j));
    }
    if (j > 0 && energies[j] < energies[j - 1]) {
      throw InvalidState("Hamiltonian: energies must be ascending");
    }
  }
  energies_ = std::move(energies);
}

double Hamiltonian::energy(int level) const {
  if (level < 0 || level >= dim()) {
    throw IndexOutOfRange("Hamiltonian: level " + std::to_string(level) +
                          " out of range for dim " + std::to_string(dim()));
  }
  return energies_[level];
}

double Hamiltonian::mean_energy() const {
  double sum = 0.0;
  for (double e : energies_) sum += e;
  return sum / dim();
}

InverseTemperature::InverseTemperature(double beta) : beta_(beta) {
  if (!(beta >= 0.0) || std::isnan(beta) || std::isinf(beta)) {
    throw InvalidBeta("InverseTemperature: beta must be finite and >= 0, got " +
                      std::to_string(beta));
  }
}

ThermalState::ThermalState(Hamiltonian h, InverseTemperature beta,
                           RealVector populations, double partition_function)
    : hamiltonian_(std::move(h)),
      beta_(beta),
      populations_(std::move(populations)),
      state_(DensityMatrix::diagonal(populations_, 1e-12)),
      partition_function_(partition_function) {
  average_energy_ = 0.0;
  for (int j = 0; j < hamiltonian_.dim(); ++j) {
    average_energy_ += hamiltonian_.energies()[j] * populations_[j];
  }
  entropy_bits_ = shannon_entropy_bits(populations_);
}

ThermalState ThermalState::at(const Hamiltonian& h, InverseTemperature beta) {
  const int d = h.dim();
  RealVector weights(d);
  const double e0 = h.ground_energy();
  for (int j = 0; j < d; ++j) {
    weights[j] = std::exp(-beta.value() * (h.energies()[j] - e0));
  }
  const double shifted_z = weights.sum();
  const double z = shifted_z * std::exp(-beta.value() * e0);
  return ThermalState(h, beta, weights / shifted_z, z);
}

double ThermalState::max_energy_cost() const {
  return hamiltonian_.mean_energy() - average_energy_;
}

ThermalState gibbs_state(const Hamiltonian& h, InverseTemperature beta) {
  return ThermalState::at(h, beta);
}

ThermalState gibbs_state(const Hamiltonian& h, double beta) {
  return ThermalState::at(h, InverseTemperature(beta));
}

double average_energy(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != h.dim()) {
    throw DimensionMismatch("average_energy: state dim " + std::to_string(rho.dim()) +
                            " vs Hamiltonian dim " + std::to_string(h.dim()));
  }
  double sum = 0.0;
  const RealVector pops = rho.populations();
  for (int j = 0; j < h.dim(); ++j) sum += h.energies()[j] * pops[j];
  return sum;
}

namespace {

double gibbs_average_energy(const Hamiltonian& h, double beta) {
  const int d = h.dim();
  const double e0 = h.ground_energy();
  double z = 0.0;
  double weighted = 0.0;
  for (int j = 0; j < d; ++j) {
    const double w = std::exp(-beta * (h.energies()[j] - e0));
    z += w;
    weighted += h.energies()[j] * w;
  }
  return weighted / z;
}

}  // namespace

InverseTemperature beta_for_energy(const Hamiltonian& h, double target_energy) {
  if (std::isnan(target_energy)) {
    throw EnergyOutOfRange("beta_for_energy: target is NaN");
  }
  const double mean = h.mean_energy();
  const double scale = std::max({1.0, std::abs(mean), h.span()});
  if (target_energy > mean + 1e-12 * scale) {
    throw EnergyOutOfRange("beta_for_energy: target " + std::to_string(target_energy) +
                           " above infinite-temperature mean " + std::to_string(mean));
  }
  if (target_energy >= mean - 1e-12 * scale) {
    return InverseTemperature::infinite_temperature();
  }
  if (target_energy <= h.ground_energy()) {
    throw EnergyOutOfRange("beta_for_energy: target " + std::to_string(target_energy) +
                           " at or below ground energy");
  }

  // <E>_beta decreases strictly from the mean (beta=0) toward E_0, so the
  // root is unique. Bracket by doubling, then bisect.
  double lo = 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (gibbs_average_energy(h, hi) > target_energy) {
    hi *= 2.0;
    if (++doublings > 200) {
      throw ConvergenceFailure("beta_for_energy: failed to bracket target");
    }
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double e_mid = gibbs_average_energy(h, mid);
    if (std::abs(e_mid - target_energy) <= 1e-13 * scale) {
      return InverseTemperature(mid);
    }
    if (e_mid > target_energy) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= std::numeric_limits<double>::epsilon() * std::max(hi, 1.0)) break;
  }
  return InverseTemperature(0.5 * (lo + hi));
}

double population_temperature_derivative(const Hamiltonian& h, double beta,
                                         int level) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidBeta("population_temperature_derivative: beta must be finite and > 0");
  }
  if (level < 0 || level >= h.dim()) {
    throw IndexOutOfRange("population_temperature_derivative: level " +
                          std::to_string(level));
  }
  const ThermalState t = gibbs_state(h, beta);
  const double temperature = 1.0 / beta;
  return -(t.average_energy() - h.energies()[level]) / (temperature * temperature) *
         t.populations()[level];
}

}  // namespace thermcoh
