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

#ifndef THERMCOH_THERMAL_HPP_
#define THERMCOH_THERMAL_HPP_

#include <vector>

#include "thermcoh/quantum_core.hpp"

namespace thermcoh {

/// Diagonal Hamiltonian in the reference basis: energies ascending,
/// E_0 the ground level, units with k_B = 1.
class Hamiltonian {
 public:
  explicit Hamiltonian(std::vector<double> energies);

  int dim() const { return static_cast<int>(energies_.size()); }
  const std::vector<double>& energies() const { return energies_; }
  double energy(int level) const;
  double ground_energy() const { return energies_.front(); }
  double span() const { return energies_.back() - energies_.front(); }
  /// Tr[H]/d, the average energy of the maximally mixed state.
  double mean_energy() const;

 private:
  std::vector<double> energies_;
};

/// Inverse temperature beta >= 0. Zero is the distinguished
/// infinite-temperature value; it is represented exactly, never as a
/// large float. Negative or NaN values are rejected.
class InverseTemperature {
 public:
  explicit InverseTemperature(double beta);
  static InverseTemperature infinite_temperature() { return InverseTemperature(0.0); }

  double value() const { return beta_; }
  bool is_infinite_temperature() const { return beta_ == 0.0; }

 private:
  double beta_;
};

/// Gibbs state e^{-beta H} / Z together with its Hamiltonian, inverse
/// temperature and partition function. Populations are exp(-beta(E_j - E_0))
/// normalized, so no underflow enters the state itself.
class ThermalState {
 public:
  static ThermalState at(const Hamiltonian& h, InverseTemperature beta);

  const Hamiltonian& hamiltonian() const { return hamiltonian_; }
  InverseTemperature beta() const { return beta_; }
  const DensityMatrix& state() const { return state_; }
  double partition_function() const { return partition_function_; }
  const RealVector& populations() const { return populations_; }

  double average_energy() const { return average_energy_; }
  double entropy_bits() const { return entropy_bits_; }
  /// Largest average-energy increase any unitary can cause, reached at the
  /// uniform diagonal: Tr[H]/d - <E>_T.
  double max_energy_cost() const;

 private:
  ThermalState(Hamiltonian h, InverseTemperature beta, RealVector populations,
               double partition_function);

  Hamiltonian hamiltonian_;
  InverseTemperature beta_;
  RealVector populations_;
  DensityMatrix state_;
  double partition_function_;
  double average_energy_;
  double entropy_bits_;
};

/// Gibbs state at inverse temperature beta (beta = 0 means infinite
/// temperature). Energies are shifted by -E_0 before exponentiation;
/// populations are unaffected by the shift.
ThermalState gibbs_state(const Hamiltonian& h, InverseTemperature beta);
ThermalState gibbs_state(const Hamiltonian& h, double beta);

/// Tr[H rho]. Equals the average energy of dephase(rho) since H is diagonal.
double average_energy(const DensityMatrix& rho, const Hamiltonian& h);

/// Inverts beta |-> <E>_beta on its monotone branch by bisection. The target
/// must lie in (E_0, Tr[H]/d]; hitting the upper endpoint returns the
/// infinite-temperature value.
InverseTemperature beta_for_energy(const Hamiltonian& h, double target_energy);

/// d p_level / d T at temperature T = 1/beta:
///   -(<E>_T - E_level) / T^2 * p_level.
/// Negative exactly when E_level lies below the thermal average.
double population_temperature_derivative(const Hamiltonian& h, double beta,
                                         int level);

}  // namespace thermcoh

#endif  // THERMCOH_THERMAL_HPP_
