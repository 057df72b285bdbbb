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

#ifndef THERMCOH_CORRELATION_HPP_
#define THERMCOH_CORRELATION_HPP_

#include <cstdint>
#include <vector>

#include "thermcoh/constrained.hpp"
#include "thermcoh/search.hpp"

namespace thermcoh {

/// Noninteracting N-party system H_tot = H_1 + ... + H_N. Subsystem 0 is
/// the leftmost tensor factor; joint basis indices are row-major.
class CompositeSystem {
 public:
  explicit CompositeSystem(std::vector<Hamiltonian> locals);

  int subsystems() const { return static_cast<int>(locals_.size()); }
  int joint_dim() const { return joint_dim_; }
  const Hamiltonian& local(int subsystem) const;
  int local_dim(int subsystem) const { return locals_[subsystem].dim(); }

  /// Joint energy of each tensor basis state, in tensor order.
  const std::vector<double>& joint_energies() const { return joint_energies_; }
  /// Sum of the local Tr[H_i]/d_i, the joint infinite-temperature energy.
  double joint_mean_energy() const;

  RealVector joint_thermal_populations(InverseTemperature beta) const;
  DensityMatrix joint_thermal_state(InverseTemperature beta) const;
  double joint_average_energy(InverseTemperature beta) const;

  /// Marginal of `rho` on subsystem `keep` (all others traced out).
  DensityMatrix partial_trace(const DensityMatrix& rho, int keep) const;

 private:
  std::vector<Hamiltonian> locals_;
  std::vector<int> strides_;
  std::vector<double> joint_energies_;
  int joint_dim_;
};

/// Total correlation sum_i S(rho^i) - S(rho), in bits.
double mutual_information(const DensityMatrix& rho, const CompositeSystem& sys);

/// Energy budget validated against the joint system's available span.
EnergyBudget joint_budget(const CompositeSystem& sys, InverseTemperature beta,
                          double delta_e);

/// Common target temperature: the beta' at which the joint thermal state
/// spends exactly delta_e more average energy than at beta.
InverseTemperature marginal_target_beta(const CompositeSystem& sys,
                                        InverseTemperature beta,
                                        const EnergyBudget& budget);

/// Largest total correlation creatable with the given energy:
/// sum_i [S(rho^i_T') - S(rho^i_T)] at the common target temperature.
double max_correlation_bound(const CompositeSystem& sys, InverseTemperature beta,
                             const EnergyBudget& budget);

/// Rotation plan realizing maximal coherence on the joint system with the
/// given budget (joint thermal diagonal to joint thermal diagonal).
RotationPlan joint_max_coherence_rotation(const CompositeSystem& sys,
                                          InverseTemperature beta,
                                          const EnergyBudget& budget);

/// Bounds and achieved values for one unitary at one budget. The achieved
/// coherence never exceeds the correlation bound and the achieved
/// correlation never exceeds the coherence bound; the two bounds coincide.
struct ComparisonReport {
  double i_max;      // bits
  double c_at_imax;  // coherence achieved by the supplied unitary, bits
  double c_max;      // bits
  double i_at_cmax;  // correlation achieved by the supplied unitary, bits
  double budget;     // energy units
};

/// Evaluates the supplied unitary (its cost must match the budget within
/// 1e-6, else EnergyMismatch) and assembles the comparison report.
ComparisonReport coherence_correlation_tradeoff(const CompositeSystem& sys,
                                                InverseTemperature beta,
                                                const EnergyBudget& budget,
                                                const UnitaryMatrix& u);

struct NogoConfig {
  int attempts = 64;
  std::uint64_t seed = 1;
  int max_sweeps = 400;
  double penalty_weight = 10.0;  // weight of the squared energy violation
  Execution execution = Execution::parallel;
};

/// Outcome of the simultaneity search: the smallest joint deviation found
/// between the final state and the pair of targets (thermal diagonal and
/// thermal marginals at the same higher temperature).
struct NogoReport {
  double min_deviation = 0.0;
  UnitaryMatrix best_unitary;
  double energy_error = 0.0;
  long long evaluations = 0;
};

/// Multi-start derivative-free minimization of
///   D(U) = ||dephase(rho_f) - rho^D_T'||_1
///        + ||rho^A_f x rho^B_f - rho^A_T' x rho^B_T'||_1
/// over two-qubit unitaries, with the energy constraint penalized. Attempt 0
/// starts from the identity so feasible control cases (delta_e = 0) are
/// found exactly; the remaining attempts start from Haar samples.
NogoReport verify_two_qubit_nogo(const CompositeSystem& sys, InverseTemperature beta,
                                 const EnergyBudget& budget, const NogoConfig& cfg);

/// Two-qubit state with support on the diagonal and anti-diagonal only.
struct XState {
  Eigen::Vector4d diag;
  Complex y;  // (0,3) entry
  Complex x;  // (1,2) entry

  XState(Eigen::Vector4d diag, Complex y, Complex x);
  DensityMatrix to_density_matrix() const;
  /// Block eigenvalues in descending order, from the closed 2x2 forms.
  Eigen::Vector4d analytic_eigenvalues() const;
};

/// Feasibility certificates for matching the spectrum of a symmetric
/// two-qubit thermal state (parameter p) with an anti-diagonally correlated
/// state whose diagonal is thermal at parameter q. A negative slack means
/// the corresponding eigenvalue assignment is impossible.
struct XStateCaseReport {
  double case1_slack;        // -(distance of q from the feasible set {p, 1-p})
  bool case1_identity_only;  // q == p: feasible, but only via the identity
  double case2_slack;        // required mixing factor minus its minimum of 1
  double case3_slack;        // required |x| value; negative is contradictory
  bool any_feasible;
};

/// Case analysis for 1/2 < q <= p < 1 (q = p marks the trivial boundary).
XStateCaseReport xstate_eigen_cases(double p, double q);

}  // namespace thermcoh

#endif  // THERMCOH_CORRELATION_HPP_
