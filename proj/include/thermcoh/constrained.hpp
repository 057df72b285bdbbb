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

#ifndef THERMCOH_CONSTRAINED_HPP_
#define THERMCOH_CONSTRAINED_HPP_

#include <vector>

#include "thermcoh/coherence.hpp"
#include "thermcoh/thermal.hpp"

namespace thermcoh {

/// Energy available to a coherence-creating unitary. Valid budgets lie in
/// [0, W_max] of the source state; overshoots up to 1e-12 are clamped to
/// the endpoint, larger ones raise BudgetOutOfRange.
class EnergyBudget {
 public:
  static EnergyBudget for_state(const ThermalState& t, double delta_e);
  static EnergyBudget checked(double delta_e, double w_max);

  double delta_e() const { return delta_e_; }
  double w_max() const { return w_max_; }

 private:
  EnergyBudget(double delta_e, double w_max) : delta_e_(delta_e), w_max_(w_max) {}
  double delta_e_;
  double w_max_;
};

/// One two-dimensional rotation in the (j, k) coordinate plane, j < k:
/// rows/columns j and k mix through [[cos a, -sin a], [sin a, cos a]].
struct GivensStep {
  int j;
  int k;
  double angle;  // radians, in [0, pi/2]
};

/// Ordered product of embedded plane rotations; `composed` applies the steps
/// in sequence (first step rightmost) and is real orthogonal.
struct RotationPlan {
  std::vector<GivensStep> steps;
  RealMatrix composed;

  UnitaryMatrix unitary() const;
};

/// Product of the embedded rotations, first step applied first.
RealMatrix compose_givens(int dim, const std::vector<GivensStep>& steps);

/// True iff x is majorized by y: descending partial sums of x never exceed
/// those of y (1e-12 slack). Both inputs must be probability vectors.
bool check_majorization(const RealVector& x, const RealVector& y);

struct ConstrainedBound {
  InverseTemperature beta_prime;
  double bits;
};

/// Largest coherence creatable from t with at most `budget` energy:
/// S(rho_T') - S(rho_T), with T' fixed by the energy constraint.
ConstrainedBound constrained_bound(const ThermalState& t, const EnergyBudget& budget);

/// Builds a chain of at most d-1 plane rotations whose orthostochastic
/// action carries `source` to `target` on the diagonal. Requires
/// target majorized by source; both thermal population vectors of a common
/// Hamiltonian at temperatures T' >= T always qualify.
///
/// Greedy pairing: repeatedly rotate the surplus coordinate of largest
/// target value against the deficit coordinate of smallest target value,
/// transferring until one of them reaches its target exactly. A coordinate,
/// once settled, is never touched again, which keeps the active off-diagonal
/// entry zero at every step and makes each diagonal update exactly the
/// 2x2 quadratic.
RotationPlan synthesize_rotation_for_diagonals(const RealVector& source,
                                               const RealVector& target);

/// Rotation plan turning the thermal diagonal at beta into the thermal
/// diagonal at beta_prime (beta_prime <= beta required).
RotationPlan synthesize_rotation(const ThermalState& t, InverseTemperature beta_prime);

/// Result of a budgeted coherence-creation protocol. Invariants:
/// |achieved_energy - delta_e| <= 1e-8 and bound - achieved_c_r <= 1e-8.
struct ConstrainedReport {
  InverseTemperature target_beta_prime;
  double bound;            // bits
  double achieved_c_r;     // bits
  double achieved_energy;  // energy units
  RotationPlan plan;
};

/// Synthesizes and evaluates the optimal rotation for any dimension.
ConstrainedReport constrained_protocol(const ThermalState& t, const EnergyBudget& budget);

/// Closed-form qubit protocol: a single rotation by
/// theta = arccos sqrt((p + q - 1) / (2p - 1)) with q = p - dE / (E_1 - E_0).
/// Rejects infinite-temperature sources (p = 1/2).
ConstrainedReport qubit_protocol(const ThermalState& t, const EnergyBudget& budget);

/// Closed-form qutrit protocol: rotate the (0,2) plane by alpha, then the
/// (0,1) plane by delta, both in [0, pi/2]. Valid whenever the middle level
/// sits above the thermal average energy.
ConstrainedReport qutrit_protocol(const ThermalState& t, const EnergyBudget& budget);

}  // namespace thermcoh

#endif  // THERMCOH_CONSTRAINED_HPP_
