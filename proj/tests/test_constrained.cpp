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
#include <numbers>

#include <doctest.h>

#include "thermcoh/random.hpp"
#include "thermcoh/search.hpp"
#include "test_helpers.hpp"

using namespace thermcoh;
using thermcoh::testing::binary_entropy_bits;
using thermcoh::testing::random_beta;
using thermcoh::testing::random_hamiltonian;

namespace {

const Hamiltonian kQubit({0.0, 1.0});

// Independent route to the plan's action: build each embedded rotation as a
// full matrix and conjugate the initial state explicitly.
RealVector conjugation_oracle(const RealVector& populations,
                              const std::vector<GivensStep>& steps) {
  const int d = static_cast<int>(populations.size());
  RealMatrix rho = populations.asDiagonal();
  for (const GivensStep& step : steps) {
    RealMatrix g = RealMatrix::Identity(d, d);
    g(step.j, step.j) = std::cos(step.angle);
    g(step.k, step.k) = std::cos(step.angle);
    g(step.j, step.k) = -std::sin(step.angle);
    g(step.k, step.j) = std::sin(step.angle);
    rho = g * rho * g.transpose();
  }
  return rho.diagonal();
}

}  // namespace

TEST_CASE("energy budget validation") {
  const ThermalState t = gibbs_state(kQubit, std::log(3.0));
  CHECK(t.max_energy_cost() == doctest::Approx(0.25).epsilon(1e-14));

  CHECK_THROWS_AS(EnergyBudget::for_state(t, -0.01), BudgetOutOfRange);
  CHECK_THROWS_AS(EnergyBudget::for_state(t, 0.26), BudgetOutOfRange);
  // Endpoint float noise is clamped.
  CHECK(EnergyBudget::for_state(t, 0.25 + 1e-13).delta_e() ==
        doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("majorization partial sums") {
  const RealVector uniform = RealVector::Constant(4, 0.25);
  const RealVector skewed{{0.6, 0.25, 0.1, 0.05}};
  CHECK(check_majorization(uniform, skewed));
  CHECK(!check_majorization(skewed, uniform));
  CHECK(check_majorization(skewed, skewed));

  CHECK_THROWS_AS(check_majorization(RealVector{{0.4, 0.4}}, RealVector{{0.5, 0.5}}),
                  NotAProbabilityVector);
  CHECK_THROWS_AS(check_majorization(RealVector{{1.2, -0.2}}, RealVector{{0.5, 0.5}}),
                  NotAProbabilityVector);
}

TEST_CASE("constrained bound endpoints and interior value") {
  const ThermalState t = gibbs_state(kQubit, std::log(3.0));

  CHECK(constrained_bound(t, EnergyBudget::for_state(t, 0.0)).bits == 0.0);

  const ConstrainedBound full = constrained_bound(t, EnergyBudget::for_state(t, 0.25));
  CHECK(full.beta_prime.is_infinite_temperature());
  CHECK(full.bits == doctest::Approx(1.0 - t.entropy_bits()).epsilon(1e-12));

  // dE = 0.15 moves the excited population to 0.40:
  // H2(0.6) - H2(0.75) = 0.159673 bits (binary-entropy oracle).
  const ConstrainedBound part = constrained_bound(t, EnergyBudget::for_state(t, 0.15));
  const double expected = binary_entropy_bits(0.6) - binary_entropy_bits(0.75);
  CHECK(std::abs(expected - 0.159673) < 1e-6);
  CHECK(part.bits == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("qubit synthesis reproduces the closed-form angle") {
  const ThermalState t = gibbs_state(kQubit, std::log(3.0));
  const RotationPlan plan =
      synthesize_rotation(t, beta_for_energy(kQubit, t.average_energy() + 0.15));

  REQUIRE(plan.steps.size() == 1);
  CHECK(plan.steps[0].j == 0);
  CHECK(plan.steps[0].k == 1);
  // arccos sqrt((p + q - 1)/(2p - 1)) = arccos sqrt(0.7) for p=.75, q=.60.
  const double theta = std::acos(std::sqrt(0.7));
  CHECK(std::abs(theta - 0.579640) < 1e-6);
  CHECK(plan.steps[0].angle == doctest::Approx(theta).epsilon(1e-10));

  const RealVector diag = conjugation_oracle(t.populations(), plan.steps);
  CHECK(diag[0] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(diag[1] == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("synthesis trivial and error paths") {
  const ThermalState t = gibbs_state(kQubit, std::log(3.0));
  CHECK(synthesize_rotation(t, t.beta()).steps.empty());

  // A colder target is not majorized by the source.
  CHECK_THROWS_AS(synthesize_rotation(t, InverseTemperature(2.0 * std::log(3.0))),
                  NotMajorized);
}

TEST_CASE("qutrit synthesis uses the two-rotation sequence") {
  const Hamiltonian h({0.0, 1.0, 2.0});
  const ThermalState t = gibbs_state(h, 1.0);
  const EnergyBudget budget = EnergyBudget::for_state(t, 0.2);
  const InverseTemperature beta_prime =
      beta_for_energy(h, t.average_energy() + budget.delta_e());
  const RotationPlan plan = synthesize_rotation(t, beta_prime);

  REQUIRE(plan.steps.size() == 2);
  CHECK(plan.steps[0].j == 0);
  CHECK(plan.steps[0].k == 2);
  CHECK(plan.steps[1].j == 0);
  CHECK(plan.steps[1].k == 1);

  const RealVector target = gibbs_state(h, beta_prime).populations();
  const RealVector diag = conjugation_oracle(t.populations(), plan.steps);
  CHECK((diag - target).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("qubit protocol closed forms") {
  const ThermalState t = gibbs_state(kQubit, std::log(3.0));

  const ConstrainedReport idle = qubit_protocol(t, EnergyBudget::for_state(t, 0.0));
  CHECK(idle.plan.steps[0].angle == 0.0);
  CHECK(idle.achieved_c_r == doctest::Approx(0.0).epsilon(1e-12));

  const ConstrainedReport full = qubit_protocol(t, EnergyBudget::for_state(t, 0.25));
  CHECK(full.plan.steps[0].angle ==
        doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-12));
  CHECK(full.achieved_c_r ==
        doctest::Approx(1.0 - binary_entropy_bits(0.75)).epsilon(1e-10));

  const ConstrainedReport part = qubit_protocol(t, EnergyBudget::for_state(t, 0.15));
  CHECK(part.achieved_c_r ==
        doctest::Approx(binary_entropy_bits(0.6) - binary_entropy_bits(0.75))
            .epsilon(1e-9));
  CHECK(std::abs(part.achieved_c_r - 0.159673) < 1e-6);
  CHECK(part.achieved_energy == doctest::Approx(0.15).epsilon(1e-10));

  const ThermalState uniform =
      gibbs_state(kQubit, InverseTemperature::infinite_temperature());
  CHECK_THROWS_AS(qubit_protocol(uniform, EnergyBudget::for_state(uniform, 0.0)),
                  InfiniteTemperatureSource);
}

TEST_CASE("qubit protocol agrees with synthesis across a grid") {
  for (double p : {0.55, 0.65, 0.75, 0.85, 0.95}) {
    const InverseTemperature beta(std::log(p / (1.0 - p)));
    const ThermalState t = gibbs_state(kQubit, beta);
    for (int i = 1; i <= 10; ++i) {
      const double delta_e = t.max_energy_cost() * i / 10.0;
      const EnergyBudget budget = EnergyBudget::for_state(t, delta_e);
      const ConstrainedReport closed = qubit_protocol(t, budget);
      const ConstrainedReport synth = constrained_protocol(t, budget);
      const double closed_cos = std::abs(std::cos(closed.plan.steps[0].angle));
      const double synth_cos = std::abs(
          std::cos(synth.plan.steps.empty() ? 0.0 : synth.plan.steps[0].angle));
      CHECK(std::abs(closed_cos - synth_cos) < 1e-10);
    }
  }
}

TEST_CASE("qutrit protocol") {
  const Hamiltonian h({0.0, 1.0, 2.0});
  const ThermalState t = gibbs_state(h, 1.0);

  const ConstrainedReport idle = qutrit_protocol(t, EnergyBudget::for_state(t, 0.0));
  CHECK(idle.plan.steps[0].angle == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(idle.plan.steps[1].angle == doctest::Approx(0.0).epsilon(1e-12));

  const EnergyBudget budget = EnergyBudget::for_state(t, 0.2);
  const ConstrainedReport report = qutrit_protocol(t, budget);
  REQUIRE(report.plan.steps.size() == 2);
  for (const GivensStep& step : report.plan.steps) {
    CHECK(step.angle >= 0.0);
    CHECK(step.angle <= std::numbers::pi / 2.0);
  }

  const RealVector target = gibbs_state(h, report.target_beta_prime).populations();
  const RealVector diag = conjugation_oracle(t.populations(), report.plan.steps);
  CHECK((diag - target).cwiseAbs().maxCoeff() < 1e-9);

  // Probability bookkeeping: the ground loss covers both excited gains.
  const double dp = t.populations()[0] - target[0];
  const double dq = target[2] - t.populations()[2];
  CHECK(dp > dq);
  CHECK(dq > 0.0);
  CHECK(target[2] > t.populations()[2]);
  CHECK(target[2] < t.populations()[0]);

  // Middle level below the thermal average violates the protocol premise.
  const Hamiltonian lopsided({0.0, 0.05, 10.0});
  const ThermalState bad = gibbs_state(lopsided, 0.2);
  CHECK(bad.average_energy() > 0.05);
  CHECK_THROWS_AS(qutrit_protocol(bad, EnergyBudget::for_state(bad, 0.01)),
                  ValidityConditionViolated);
}

TEST_CASE("synthesis sweeps random instances") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 7);
    const ThermalState t = gibbs_state(random_hamiltonian(d, rng), random_beta(rng));
    const double delta_e = unit(rng) * t.max_energy_cost();
    const EnergyBudget budget = EnergyBudget::for_state(t, delta_e);
    const ConstrainedReport report = constrained_protocol(t, budget);

    CHECK(static_cast<int>(report.plan.steps.size()) <= d - 1);
    // Real orthogonal within 1e-12.
    const RealMatrix& r = report.plan.composed;
    CHECK((r.transpose() * r - RealMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <
          1e-12);

    const RealVector target =
        gibbs_state(t.hamiltonian(), report.target_beta_prime).populations();
    const RealVector diag = conjugation_oracle(t.populations(), report.plan.steps);
    CHECK((diag - target).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(std::abs(report.achieved_energy - delta_e) < 1e-8);
    CHECK(std::abs(report.achieved_c_r - report.bound) < 1e-8);

    // The induced orthostochastic map carries the source populations to the
    // target populations directly.
    const RealMatrix map = induced_doubly_stochastic(report.plan.unitary());
    CHECK((map * t.populations() - target).cwiseAbs().maxCoeff() < 1e-10);

    // The composed matrix is the ordered product of its steps.
    RealMatrix product = RealMatrix::Identity(d, d);
    for (const GivensStep& step : report.plan.steps) {
      RealMatrix g = RealMatrix::Identity(d, d);
      g(step.j, step.j) = std::cos(step.angle);
      g(step.k, step.k) = std::cos(step.angle);
      g(step.j, step.k) = -std::sin(step.angle);
      g(step.k, step.j) = std::sin(step.angle);
      product = g * product;
    }
    CHECK((product - r).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("oracle search never beats the synthesized protocol") {
  struct Instance {
    std::vector<double> energies;
    double beta;
    double delta_e;
  };
  for (const Instance& inst : {Instance{{0.0, 1.0}, std::log(3.0), 0.15},
                               Instance{{0.0, 1.0, 2.0}, 1.0, 0.2}}) {
    const ThermalState t = gibbs_state(Hamiltonian(inst.energies), inst.beta);
    const EnergyBudget budget = EnergyBudget::for_state(t, inst.delta_e);
    const ConstrainedReport synth = constrained_protocol(t, budget);

    // Haar samples within the budget stay under the ceiling. The filter is
    // one-sided: for qubits every unitary saturates the ceiling at its own
    // cost, so anything spending more than delta_e lands above bound(delta_e).
    const double delta_e = inst.delta_e;
    std::mt19937_64 rng(33);
    const int d = t.hamiltonian().dim();
    for (int i = 0; i < 10000; ++i) {
      const UnitaryMatrix u = haar_unitary(d, rng);
      const DensityMatrix rho_f = conjugate(t.state(), u);
      const double cost = average_energy(rho_f, t.hamiltonian()) - t.average_energy();
      if (cost > delta_e || cost < delta_e - 1e-3) continue;
      CHECK(relative_entropy_of_coherence(rho_f) <= synth.bound + 1e-6);
    }

    // The refined oracle cannot beat the synthesized plan.
    SearchConfig cfg;
    cfg.samples = 4000;
    cfg.restarts = 4;
    cfg.seed = 34;
    const SearchResult oracle = maximize_over_unitaries(
        [](const DensityMatrix& rho) { return relative_entropy_of_coherence(rho); }, t,
        [delta_e](double cost) { return cost <= delta_e && cost >= delta_e - 1e-3; },
        cfg);
    CHECK(oracle.best_value <= synth.achieved_c_r + 1e-8);
  }
}

TEST_CASE("synthesis survives a near-pure source") {
  const Hamiltonian h({0.0, 0.5, 1.4});
  const ThermalState t = gibbs_state(h, 20.0);  // ground population ~ 1 - 5e-5
  const EnergyBudget budget = EnergyBudget::for_state(t, 0.5 * t.max_energy_cost());
  const ConstrainedReport report = constrained_protocol(t, budget);
  const RealVector target =
      gibbs_state(h, report.target_beta_prime).populations();
  const RealVector diag = conjugation_oracle(t.populations(), report.plan.steps);
  CHECK((diag - target).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("synthesis handles degenerate levels") {
  // Tied populations stay in index order; settled pairs are skipped.
  const Hamiltonian h({0.0, 1.0, 1.0, 2.0});
  const ThermalState t = gibbs_state(h, 0.9);
  CHECK(t.populations()[1] == t.populations()[2]);

  const EnergyBudget budget = EnergyBudget::for_state(t, 0.6 * t.max_energy_cost());
  const ConstrainedReport report = constrained_protocol(t, budget);
  CHECK(static_cast<int>(report.plan.steps.size()) <= 3);

  const RealVector target =
      gibbs_state(h, report.target_beta_prime).populations();
  const RealVector diag = conjugation_oracle(t.populations(), report.plan.steps);
  CHECK((diag - target).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("bound is nondecreasing and concave in the budget") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const ThermalState t = gibbs_state(random_hamiltonian(d, rng), random_beta(rng));
    const int n = 21;
    std::vector<double> bits(n);
    for (int i = 0; i < n; ++i) {
      const double delta_e = t.max_energy_cost() * i / (n - 1);
      bits[i] = constrained_bound(t, EnergyBudget::for_state(t, delta_e)).bits;
    }
    for (int i = 1; i < n; ++i) {
      CHECK(bits[i] >= bits[i - 1] - 1e-12);
    }
    for (int i = 1; i + 1 < n; ++i) {
      CHECK(bits[i + 1] - 2 * bits[i] + bits[i - 1] <= 1e-9);
    }
  }
}
