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

#include "thermcoh/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "thermcoh/random.hpp"

namespace thermcoh {

CompositeSystem::CompositeSystem(std::vector<Hamiltonian> locals)
    : locals_(std::move(locals)) {
  const int n = static_cast<int>(locals_.size());
  if (n < 2 || n > 3) {
    throw InvalidDimension("CompositeSystem: requires 2 or 3 subsystems");
  }
  joint_dim_ = 1;
  for (const Hamiltonian& h : locals_) {
    if (h.dim() > 3) {
      throw InvalidDimension("CompositeSystem: local dimensions are limited to 2 or 3");
    }
    joint_dim_ *= h.dim();
  }
  if (joint_dim_ > kMaxDim) {
    throw InvalidDimension("CompositeSystem: joint dimension exceeds " +
                           std::to_string(kMaxDim));
  }
  strides_.assign(n, 1);
  for (int k = n - 2; k >= 0; --k) {
    strides_[k] = strides_[k + 1] * locals_[k + 1].dim();
  }
  joint_energies_.assign(joint_dim_, 0.0);
  for (int index = 0; index < joint_dim_; ++index) {
    for (int k = 0; k < n; ++k) {
      const int digit = (index / strides_[k]) % locals_[k].dim();
      joint_energies_[index] += locals_[k].energies()[digit];
    }
  }
}

const Hamiltonian& CompositeSystem::local(int subsystem) const {
  if (subsystem < 0 || subsystem >= subsystems()) {
    throw IndexOutOfRange("CompositeSystem: subsystem " + std::to_string(subsystem));
  }
  return locals_[subsystem];
}

double CompositeSystem::joint_mean_energy() const {
  double sum = 0.0;
  for (const Hamiltonian& h : locals_) sum += h.mean_energy();
  return sum;
}

RealVector CompositeSystem::joint_thermal_populations(InverseTemperature beta) const {
  RealVector populations = RealVector::Ones(joint_dim_);
  for (int k = 0; k < subsystems(); ++k) {
    const RealVector local_pops = gibbs_state(locals_[k], beta).populations();
    for (int index = 0; index < joint_dim_; ++index) {
      const int digit = (index / strides_[k]) % locals_[k].dim();
      populations[index] *= local_pops[digit];
    }
  }
  return populations;
}

DensityMatrix CompositeSystem::joint_thermal_state(InverseTemperature beta) const {
  return DensityMatrix::diagonal(joint_thermal_populations(beta));
}

double CompositeSystem::joint_average_energy(InverseTemperature beta) const {
  double sum = 0.0;
  for (const Hamiltonian& h : locals_) {
    sum += gibbs_state(h, beta).average_energy();
  }
  return sum;
}

DensityMatrix CompositeSystem::partial_trace(const DensityMatrix& rho, int keep) const {
  if (rho.dim() != joint_dim_) {
    throw DimensionMismatch("partial_trace: state dim " + std::to_string(rho.dim()) +
                            " vs joint dim " + std::to_string(joint_dim_));
  }
  if (keep < 0 || keep >= subsystems()) {
    throw IndexOutOfRange("partial_trace: subsystem " + std::to_string(keep));
  }
  const int d_keep = locals_[keep].dim();
  const int stride = strides_[keep];
  Matrix out = Matrix::Zero(d_keep, d_keep);
  for (int row = 0; row < joint_dim_; ++row) {
    for (int col = 0; col < joint_dim_; ++col) {
      // Indices must agree on every subsystem except `keep`.
      if (row - ((row / stride) % d_keep) * stride !=
          col - ((col / stride) % d_keep) * stride) {
        continue;
      }
      out((row / stride) % d_keep, (col / stride) % d_keep) += rho.entries()(row, col);
    }
  }
  return DensityMatrix::unchecked(std::move(out));
}

double mutual_information(const DensityMatrix& rho, const CompositeSystem& sys) {
  if (rho.dim() != sys.joint_dim()) {
    throw DimensionMismatch("mutual_information: dims inconsistent");
  }
  double marginal_sum = 0.0;
  for (int k = 0; k < sys.subsystems(); ++k) {
    marginal_sum += von_neumann_entropy(sys.partial_trace(rho, k));
  }
  return std::max(0.0, marginal_sum - von_neumann_entropy(rho));
}

EnergyBudget joint_budget(const CompositeSystem& sys, InverseTemperature beta,
                          double delta_e) {
  return EnergyBudget::checked(delta_e,
                               sys.joint_mean_energy() - sys.joint_average_energy(beta));
}

InverseTemperature marginal_target_beta(const CompositeSystem& sys,
                                        InverseTemperature beta,
                                        const EnergyBudget& budget) {
  if (budget.delta_e() == 0.0) return beta;
  // Z and <E> only depend on the multiset of joint energies, so the sorted
  // list is a legitimate Hamiltonian for the inversion.
  std::vector<double> sorted = sys.joint_energies();
  std::sort(sorted.begin(), sorted.end());
  const Hamiltonian joint(std::move(sorted));
  return beta_for_energy(joint, sys.joint_average_energy(beta) + budget.delta_e());
}

double max_correlation_bound(const CompositeSystem& sys, InverseTemperature beta,
                             const EnergyBudget& budget) {
  const InverseTemperature beta_prime = marginal_target_beta(sys, beta, budget);
  double bits = 0.0;
  for (int k = 0; k < sys.subsystems(); ++k) {
    bits += gibbs_state(sys.local(k), beta_prime).entropy_bits() -
            gibbs_state(sys.local(k), beta).entropy_bits();
  }
  return std::max(0.0, bits);
}

RotationPlan joint_max_coherence_rotation(const CompositeSystem& sys,
                                          InverseTemperature beta,
                                          const EnergyBudget& budget) {
  const InverseTemperature beta_prime = marginal_target_beta(sys, beta, budget);
  return synthesize_rotation_for_diagonals(sys.joint_thermal_populations(beta),
                                           sys.joint_thermal_populations(beta_prime));
}

ComparisonReport coherence_correlation_tradeoff(const CompositeSystem& sys,
                                                InverseTemperature beta,
                                                const EnergyBudget& budget,
                                                const UnitaryMatrix& u) {
  const DensityMatrix rho = sys.joint_thermal_state(beta);
  const DensityMatrix rho_f = conjugate(rho, u);
  double cost = 0.0;
  {
    const RealVector pops = rho_f.populations();
    const RealVector initial = rho.populations();
    for (int i = 0; i < sys.joint_dim(); ++i) {
      cost += sys.joint_energies()[i] * (pops[i] - initial[i]);
    }
  }
  if (std::abs(cost - budget.delta_e()) > 1e-6) {
    throw EnergyMismatch("tradeoff: unitary spends " + std::to_string(cost) +
                         " instead of " + std::to_string(budget.delta_e()));
  }

  ComparisonReport report;
  report.budget = budget.delta_e();
  report.i_max = max_correlation_bound(sys, beta, budget);
  // Same quantity through the joint entropies; kept as a second route.
  const InverseTemperature beta_prime = marginal_target_beta(sys, beta, budget);
  report.c_max =
      std::max(0.0, shannon_entropy_bits(sys.joint_thermal_populations(beta_prime)) -
                        shannon_entropy_bits(sys.joint_thermal_populations(beta)));
  report.c_at_imax = relative_entropy_of_coherence(rho_f);
  report.i_at_cmax = mutual_information(rho_f, sys);

  if (report.c_at_imax > report.i_max + kNumericTol ||
      report.i_at_cmax > report.c_max + kNumericTol ||
      std::abs(report.i_max - report.c_max) > kNumericTol) {
    throw Error("tradeoff: report invariants violated");
  }
  return report;
}

namespace {

struct NogoInstance {
  const CompositeSystem* sys;
  RealVector initial;       // joint thermal populations at beta
  RealVector target_diag;   // joint thermal populations at beta'
  Matrix target_marginals;  // product of thermal marginals at beta'
  double initial_energy;
  double delta_e;
  double penalty_weight;
};

struct NogoPoint {
  double objective;
  double deviation;
  double energy_error;
};

NogoPoint nogo_evaluate(const NogoInstance& inst, const Matrix& u) {
  const Matrix rho_f = u * inst.initial.cast<Complex>().asDiagonal() * u.adjoint();

  double diag_deviation = 0.0;
  double energy = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double p = rho_f(i, i).real();
    diag_deviation += std::abs(p - inst.target_diag[i]);
    energy += inst.sys->joint_energies()[i] * p;
  }

  const DensityMatrix state = DensityMatrix::unchecked(rho_f);
  const Matrix marg_a = inst.sys->partial_trace(state, 0).entries();
  const Matrix marg_b = inst.sys->partial_trace(state, 1).entries();
  Matrix product(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      product.block(2 * i, 2 * j, 2, 2) = marg_a(i, j) * marg_b;
    }
  }

  NogoPoint point;
  point.deviation = diag_deviation + trace_norm(product - inst.target_marginals);
  point.energy_error = std::abs(energy - inst.initial_energy - inst.delta_e);
  point.objective =
      point.deviation + inst.penalty_weight * point.energy_error * point.energy_error;
  return point;
}

struct NogoOutcome {
  double objective = std::numeric_limits<double>::infinity();
  double deviation = std::numeric_limits<double>::infinity();
  double energy_error = 0.0;
  Matrix unitary;
  long long evaluations = 0;
};

// Coordinate descent on the full unitary chart: phased plane rotations in
// both quadratures plus row phases, 16 directions for two qubits.
NogoOutcome nogo_descend(const NogoInstance& inst, Matrix u, int max_sweeps) {
  NogoOutcome out;
  NogoPoint current = nogo_evaluate(inst, u);
  out.evaluations = 1;
  double step = 0.5;
  int sweeps = 0;
  while (step > 1e-9 && sweeps < max_sweeps) {
    ++sweeps;
    bool improved = false;
    auto try_candidate = [&](const Matrix& cand) {
      const NogoPoint p = nogo_evaluate(inst, cand);
      ++out.evaluations;
      if (p.objective < current.objective) {
        u = cand;
        current = p;
        improved = true;
      }
    };
    for (int j = 0; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        for (double phase : {0.0, std::numbers::pi / 2.0}) {
          for (double sign : {1.0, -1.0}) {
            Matrix cand = u;
            const double c = std::cos(sign * step);
            const double s = std::sin(sign * step);
            const Complex mix = std::polar(1.0, phase);
            const Vector row_j = cand.row(j);
            const Vector row_k = cand.row(k);
            cand.row(j) = c * row_j - s * mix * row_k;
            cand.row(k) = s * std::conj(mix) * row_j + c * row_k;
            try_candidate(cand);
          }
        }
      }
    }
    for (int m = 0; m < 4; ++m) {
      for (double sign : {1.0, -1.0}) {
        Matrix cand = u;
        cand.row(m) *= std::polar(1.0, sign * step);
        try_candidate(cand);
      }
    }
    if (!improved) step *= 0.5;
  }
  out.objective = current.objective;
  out.deviation = current.deviation;
  out.energy_error = current.energy_error;
  out.unitary = std::move(u);
  return out;
}

}  // namespace

NogoReport verify_two_qubit_nogo(const CompositeSystem& sys, InverseTemperature beta,
                                 const EnergyBudget& budget, const NogoConfig& cfg) {
  if (sys.subsystems() != 2 || sys.local_dim(0) != 2 || sys.local_dim(1) != 2) {
    throw InvalidDimension("verify_two_qubit_nogo: requires two qubits");
  }
  if (beta.is_infinite_temperature()) {
    throw InfiniteTemperatureSource("verify_two_qubit_nogo: requires finite beta");
  }
  if (cfg.attempts < 1) {
    throw Error("verify_two_qubit_nogo: attempts must be >= 1");
  }

  const InverseTemperature beta_prime = marginal_target_beta(sys, beta, budget);
  NogoInstance inst;
  inst.sys = &sys;
  inst.initial = sys.joint_thermal_populations(beta);
  inst.target_diag = sys.joint_thermal_populations(beta_prime);
  inst.target_marginals = inst.target_diag.cast<Complex>().asDiagonal();
  inst.initial_energy = sys.joint_average_energy(beta);
  inst.delta_e = budget.delta_e();
  inst.penalty_weight = cfg.penalty_weight;

  std::vector<NogoOutcome> outcomes(cfg.attempts);
  const bool parallel = cfg.execution == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int a = 0; a < cfg.attempts; ++a) {
    Matrix start;
    if (a == 0) {
      start = Matrix::Identity(4, 4);
    } else {
      std::mt19937_64 stream = substream(cfg.seed, static_cast<std::uint64_t>(a));
      start = haar_unitary(4, stream).entries();
    }
    outcomes[a] = nogo_descend(inst, std::move(start), cfg.max_sweeps);
  }

  int best = 0;
  for (int a = 1; a < cfg.attempts; ++a) {
    if (outcomes[a].objective < outcomes[best].objective) best = a;
  }
  NogoReport report;
  report.min_deviation = outcomes[best].deviation;
  report.energy_error = outcomes[best].energy_error;
  report.best_unitary = UnitaryMatrix::unchecked(std::move(outcomes[best].unitary));
  for (const NogoOutcome& out : outcomes) report.evaluations += out.evaluations;
  return report;
}

XState::XState(Eigen::Vector4d diag_in, Complex y_in, Complex x_in)
    : diag(std::move(diag_in)), y(y_in), x(x_in) {
  if (!(diag.minCoeff() >= -kValidityTol)) {
    throw InvalidState("XState: negative diagonal entry");
  }
  if (!(std::abs(diag.sum() - 1.0) <= kValidityTol)) {
    throw InvalidState("XState: diagonal does not sum to 1");
  }
  if (std::abs(y) > std::sqrt(std::max(0.0, diag[0] * diag[3])) + kValidityTol) {
    throw InvalidState("XState: |y| breaks positivity of the outer block");
  }
  if (std::abs(x) > std::sqrt(std::max(0.0, diag[1] * diag[2])) + kValidityTol) {
    throw InvalidState("XState: |x| breaks positivity of the inner block");
  }
}

DensityMatrix XState::to_density_matrix() const {
  Matrix m = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) m(i, i) = diag[i];
  m(0, 3) = y;
  m(3, 0) = std::conj(y);
  m(1, 2) = x;
  m(2, 1) = std::conj(x);
  return DensityMatrix(std::move(m));
}

Eigen::Vector4d XState::analytic_eigenvalues() const {
  const double outer_mid = 0.5 * (diag[0] + diag[3]);
  const double outer_rad = std::hypot(0.5 * (diag[0] - diag[3]), std::abs(y));
  const double inner_mid = 0.5 * (diag[1] + diag[2]);
  const double inner_rad = std::hypot(0.5 * (diag[1] - diag[2]), std::abs(x));
  Eigen::Vector4d eigs{outer_mid + outer_rad, outer_mid - outer_rad,
                       inner_mid + inner_rad, inner_mid - inner_rad};
  std::sort(eigs.data(), eigs.data() + 4, std::greater<double>());
  return eigs;
}

XStateCaseReport xstate_eigen_cases(double p, double q) {
  if (!(q > 0.5) || !(q <= p) || !(p < 1.0)) {
    throw DomainError("xstate_eigen_cases: requires 1/2 < q <= p < 1");
  }
  XStateCaseReport report;
  report.case1_identity_only = std::abs(q - p) <= 1e-12;
  report.case1_slack = -std::min(std::abs(q - p), std::abs(q - (1.0 - p)));
  report.case2_slack = -1.0;  // the assignment forces mixing factor 0, minimum is 1
  report.case3_slack = p * (1.0 - p) - q * (1.0 - q);
  report.any_feasible = report.case1_identity_only;
  return report;
}

}  // namespace thermcoh
