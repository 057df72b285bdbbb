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

#include "thermcoh/constrained.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace thermcoh {

namespace {

constexpr double kFixTol = 1e-12;  // coordinates within this of target are settled

void validate_probability_vector(const RealVector& v, const char* what) {
  if (v.size() < 1) throw NotAProbabilityVector(std::string(what) + ": empty vector");
  if (!(v.minCoeff() >= -kValidityTol)) {
    throw NotAProbabilityVector(std::string(what) + ": negative entry");
  }
  if (!(std::abs(v.sum() - 1.0) <= kValidityTol)) {
    throw NotAProbabilityVector(std::string(what) + ": entries do not sum to 1");
  }
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

ConstrainedReport evaluate_plan(const ThermalState& t, InverseTemperature beta_prime,
                                double bound, double delta_e, RotationPlan plan) {
  const DensityMatrix rho_f = conjugate(t.state(), plan.unitary());
  ConstrainedReport report{beta_prime, bound, relative_entropy_of_coherence(rho_f),
                           average_energy(rho_f, t.hamiltonian()) - t.average_energy(),
                           std::move(plan)};
  if (std::abs(report.achieved_energy - delta_e) > kNumericTol) {
    throw Error("constrained protocol spent " + std::to_string(report.achieved_energy) +
                " instead of " + std::to_string(delta_e));
  }
  if (std::abs(report.bound - report.achieved_c_r) > kNumericTol) {
    throw Error("constrained protocol missed its bound by " +
                std::to_string(report.bound - report.achieved_c_r) + " bits");
  }
  return report;
}

}  // namespace

EnergyBudget EnergyBudget::checked(double delta_e, double w_max) {
  if (std::isnan(delta_e)) throw BudgetOutOfRange("EnergyBudget: NaN budget");
  if (delta_e < 0.0) {
    if (delta_e < -1e-12) {
      throw BudgetOutOfRange("EnergyBudget: negative budget " + std::to_string(delta_e));
    }
    delta_e = 0.0;
  }
  if (delta_e > w_max) {
    if (delta_e > w_max + 1e-12) {
      throw BudgetOutOfRange("EnergyBudget: " + std::to_string(delta_e) +
                             " exceeds available " + std::to_string(w_max));
    }
    delta_e = w_max;  // float noise at the endpoint
  }
  return EnergyBudget(delta_e, w_max);
}

EnergyBudget EnergyBudget::for_state(const ThermalState& t, double delta_e) {
  return checked(delta_e, t.max_energy_cost());
}

UnitaryMatrix RotationPlan::unitary() const {
  return UnitaryMatrix(composed.cast<Complex>());
}

RealMatrix compose_givens(int dim, const std::vector<GivensStep>& steps) {
  RealMatrix r = RealMatrix::Identity(dim, dim);
  for (const GivensStep& step : steps) {
    const double c = std::cos(step.angle);
    const double s = std::sin(step.angle);
    const RealVector row_j = r.row(step.j);
    const RealVector row_k = r.row(step.k);
    r.row(step.j) = c * row_j - s * row_k;
    r.row(step.k) = s * row_j + c * row_k;
  }
  return r;
}

bool check_majorization(const RealVector& x, const RealVector& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("check_majorization: size mismatch");
  }
  validate_probability_vector(x, "check_majorization");
  validate_probability_vector(y, "check_majorization");
  std::vector<double> xs(x.data(), x.data() + x.size());
  std::vector<double> ys(y.data(), y.data() + y.size());
  std::sort(xs.begin(), xs.end(), std::greater<double>());
  std::sort(ys.begin(), ys.end(), std::greater<double>());
  double sum_x = 0.0;
  double sum_y = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sum_x += xs[k];
    sum_y += ys[k];
    if (sum_x > sum_y + 1e-12) return false;
  }
  return true;
}

RotationPlan synthesize_rotation_for_diagonals(const RealVector& source,
                                               const RealVector& target) {
  if (source.size() != target.size()) {
    throw DimensionMismatch("synthesize_rotation: size mismatch");
  }
  if (!check_majorization(target, source)) {
    throw NotMajorized("synthesize_rotation: target is not majorized by source");
  }
  const int d = static_cast<int>(source.size());

  RealVector cur = source;
  RotationPlan plan;
  for (int round = 0; round < d - 1; ++round) {
    // Surplus with the largest target vs deficit with the smallest target.
    int a = -1;
    int b = -1;
    for (int i = 0; i < d; ++i) {
      const double dev = cur[i] - target[i];
      if (dev > kFixTol && (a < 0 || target[i] > target[a])) a = i;
      if (dev < -kFixTol && (b < 0 || target[i] < target[b])) b = i;
    }
    if (a < 0 || b < 0) break;  // every coordinate settled
    if (target[a] < target[b]) {
      // Cannot occur for thermal population pairs; defensive.
      throw NotMajorized("synthesize_rotation: no transferable pair");
    }
    const double surplus = cur[a] - target[a];
    const double deficit = target[b] - cur[b];
    const double transfer = std::min(surplus, deficit);
    const double gap = cur[a] - cur[b];  // > 0 since cur[a] > t[a] >= t[b] > cur[b]
    const double angle = std::asin(std::sqrt(clamp_unit(transfer / gap)));
    plan.steps.push_back(GivensStep{std::min(a, b), std::max(a, b), angle});
    if (surplus <= deficit) {
      cur[b] += surplus;
      cur[a] = target[a];
    } else {
      cur[a] -= deficit;
      cur[b] = target[b];
    }
  }
  const double residual = (cur - target).cwiseAbs().maxCoeff();
  if (residual > 1e-9) {
    throw Error("synthesize_rotation: residual " + std::to_string(residual) +
                " after " + std::to_string(plan.steps.size()) + " steps");
  }
  plan.composed = compose_givens(d, plan.steps);
  return plan;
}

RotationPlan synthesize_rotation(const ThermalState& t, InverseTemperature beta_prime) {
  const ThermalState hotter = gibbs_state(t.hamiltonian(), beta_prime);
  return synthesize_rotation_for_diagonals(t.populations(), hotter.populations());
}

ConstrainedBound constrained_bound(const ThermalState& t, const EnergyBudget& budget) {
  if (budget.delta_e() == 0.0) {
    return ConstrainedBound{t.beta(), 0.0};
  }
  const InverseTemperature beta_prime =
      beta_for_energy(t.hamiltonian(), t.average_energy() + budget.delta_e());
  const ThermalState hotter = gibbs_state(t.hamiltonian(), beta_prime);
  return ConstrainedBound{beta_prime,
                          std::max(0.0, hotter.entropy_bits() - t.entropy_bits())};
}

ConstrainedReport constrained_protocol(const ThermalState& t, const EnergyBudget& budget) {
  const ConstrainedBound bound = constrained_bound(t, budget);
  RotationPlan plan = synthesize_rotation(t, bound.beta_prime);
  return evaluate_plan(t, bound.beta_prime, bound.bits, budget.delta_e(), std::move(plan));
}

ConstrainedReport qubit_protocol(const ThermalState& t, const EnergyBudget& budget) {
  if (t.hamiltonian().dim() != 2) {
    throw InvalidDimension("qubit_protocol: requires a two-level system");
  }
  const double p = t.populations()[0];
  const double gap = t.hamiltonian().span();
  if (t.beta().is_infinite_temperature() || !(p > 0.5) || gap <= 0.0) {
    throw InfiniteTemperatureSource(
        "qubit_protocol: no coherence can be created from p = 1/2");
  }
  const double q = p - budget.delta_e() / gap;
  const double theta = std::acos(std::sqrt(clamp_unit((p + q - 1.0) / (2.0 * p - 1.0))));

  RotationPlan plan;
  plan.steps.push_back(GivensStep{0, 1, theta});
  plan.composed = compose_givens(2, plan.steps);

  const InverseTemperature beta_prime =
      q > 0.5 + 1e-15 ? InverseTemperature(std::log(q / (1.0 - q)) / gap)
                      : InverseTemperature::infinite_temperature();
  const double bound =
      shannon_entropy_bits(RealVector{{q, 1.0 - q}}) - t.entropy_bits();
  return evaluate_plan(t, beta_prime, bound, budget.delta_e(), std::move(plan));
}

ConstrainedReport qutrit_protocol(const ThermalState& t, const EnergyBudget& budget) {
  if (t.hamiltonian().dim() != 3) {
    throw InvalidDimension("qutrit_protocol: requires a three-level system");
  }
  const double middle_energy = t.hamiltonian().energy(1);
  if (!(middle_energy > t.average_energy())) {
    throw ValidityConditionViolated(
        "qutrit_protocol: middle level must lie above the thermal average energy");
  }
  const ConstrainedBound target = constrained_bound(t, budget);
  const ThermalState hotter = gibbs_state(t.hamiltonian(), target.beta_prime);

  const double p = t.populations()[0];
  const double mid = t.populations()[1];
  const double q = t.populations()[2];
  const double p_prime = hotter.populations()[0];
  const double q_prime = hotter.populations()[2];

  // Heating must drain the ground level into both excited levels; otherwise
  // the two-rotation sequence cannot reach the target diagonal.
  if (q_prime < q - kFixTol || q_prime > p + kFixTol) {
    throw ValidityConditionViolated("qutrit_protocol: top-level target outside [q, p]");
  }
  const double pivot = p - (q_prime - q);
  if (p_prime < mid - kFixTol || p_prime > pivot + kFixTol) {
    throw ValidityConditionViolated(
        "qutrit_protocol: ground-level target outside reachable range");
  }

  const double alpha =
      p - q > kFixTol ? std::acos(std::sqrt(clamp_unit((p - q_prime) / (p - q)))) : 0.0;
  const double delta =
      pivot - mid > kFixTol
          ? std::acos(std::sqrt(clamp_unit((p_prime - mid) / (pivot - mid))))
          : 0.0;

  RotationPlan plan;
  plan.steps.push_back(GivensStep{0, 2, alpha});
  plan.steps.push_back(GivensStep{0, 1, delta});
  plan.composed = compose_givens(3, plan.steps);
  return evaluate_plan(t, target.beta_prime, target.bits, budget.delta_e(),
                       std::move(plan));
}

}  // namespace thermcoh
