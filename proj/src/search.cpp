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

#include "thermcoh/search.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "thermcoh/random.hpp"

namespace thermcoh {

namespace {

constexpr double kMinStep = 1e-8;

struct Candidate {
  double value = -std::numeric_limits<double>::infinity();
  double cost = 0.0;
  bool admissible = false;
};

struct Instance {
  const RealVector* populations;
  const std::vector<double>* energies;
  double source_energy;
  const StateObjective* objective;
  const CostPredicate* admissible;
};

Candidate evaluate(const Instance& inst, const Matrix& u) {
  const Matrix rho_f = u * inst.populations->cast<Complex>().asDiagonal() * u.adjoint();
  Candidate cand;
  double energy = 0.0;
  for (Eigen::Index i = 0; i < rho_f.rows(); ++i) {
    energy += (*inst.energies)[i] * rho_f(i, i).real();
  }
  cand.cost = energy - inst.source_energy;
  cand.admissible = (*inst.admissible)(cand.cost);
  if (cand.admissible) {
    cand.value = (*inst.objective)(DensityMatrix::unchecked(rho_f));
  }
  return cand;
}

// Left-multiplies u by a plane rotation in rows (j, k) with a relative phase:
// row_j <- cos(a) row_j - sin(a) e^{i phi} row_k, and the conjugate partner.
void apply_phased_rotation(Matrix& u, int j, int k, double angle, double phase) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Complex mix = std::polar(1.0, phase);
  const Vector row_j = u.row(j);
  const Vector row_k = u.row(k);
  u.row(j) = c * row_j - s * mix * row_k;
  u.row(k) = s * std::conj(mix) * row_j + c * row_k;
}

struct RefineOutcome {
  bool started = false;
  double value = -std::numeric_limits<double>::infinity();
  Matrix unitary;
  long long evaluations = 0;
};

// Greedy coordinate descent over phased plane rotations and row phases with
// a shrinking step. Monotone: the kept value never decreases.
RefineOutcome refine(const Instance& inst, Matrix u, double value, int max_sweeps) {
  const int d = static_cast<int>(u.rows());
  RefineOutcome out;
  out.started = true;
  double step = 0.5;
  int sweeps = 0;
  while (step > kMinStep && sweeps < max_sweeps) {
    ++sweeps;
    bool improved = false;
    auto try_candidate = [&](const Matrix& cand) {
      const Candidate c = evaluate(inst, cand);
      ++out.evaluations;
      if (c.admissible && c.value > value) {
        u = cand;
        value = c.value;
        improved = true;
      }
    };
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        for (double phase : {0.0, std::numbers::pi / 2.0}) {
          for (double sign : {1.0, -1.0}) {
            Matrix cand = u;
            apply_phased_rotation(cand, j, k, sign * step, phase);
            try_candidate(cand);
          }
        }
      }
    }
    for (int m = 0; m < d; ++m) {
      for (double sign : {1.0, -1.0}) {
        Matrix cand = u;
        cand.row(m) *= std::polar(1.0, sign * step);
        try_candidate(cand);
      }
    }
    if (!improved) step *= 0.5;
  }
  out.value = value;
  out.unitary = std::move(u);
  return out;
}

}  // namespace

SearchResult maximize_over_unitaries_diagonal(const StateObjective& objective,
                                              const RealVector& populations,
                                              const std::vector<double>& energies,
                                              const CostPredicate& admissible,
                                              const SearchConfig& cfg) {
  if (cfg.samples < 1 || cfg.restarts < 1 || cfg.refine_sweeps < 0 ||
      !(cfg.energy_window > 0.0)) {
    throw Error("maximize_over_unitaries: invalid search configuration");
  }
  if (static_cast<std::size_t>(populations.size()) != energies.size()) {
    throw DimensionMismatch("maximize_over_unitaries: populations vs energies");
  }
  const int d = static_cast<int>(populations.size());
  double source_energy = 0.0;
  for (int i = 0; i < d; ++i) source_energy += energies[i] * populations[i];
  const Instance inst{&populations, &energies, source_energy, &objective, &admissible};

  // Sampling phase. Sample i draws from substream(seed, i), so results do
  // not depend on the execution mode or thread count.
  std::vector<Candidate> samples(cfg.samples);
  const bool parallel = cfg.execution == Execution::parallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < cfg.samples; ++i) {
    std::mt19937_64 stream = substream(cfg.seed, static_cast<std::uint64_t>(i));
    const UnitaryMatrix u = haar_unitary(d, stream);
    samples[i] = evaluate(inst, u.entries());
  }

  long long admissible_count = 0;
  for (const Candidate& c : samples) {
    if (c.admissible) ++admissible_count;
  }
  if (admissible_count == 0) {
    throw NoAdmissibleSample("maximize_over_unitaries: no sample satisfied the predicate");
  }

  // Restart r refines the best admissible sample of its chunk.
  const int restarts = cfg.restarts;
  std::vector<int> start_index(restarts, -1);
  for (int r = 0; r < restarts; ++r) {
    const int begin = static_cast<int>(static_cast<long long>(cfg.samples) * r / restarts);
    const int end =
        static_cast<int>(static_cast<long long>(cfg.samples) * (r + 1) / restarts);
    for (int i = begin; i < end; ++i) {
      if (!samples[i].admissible) continue;
      if (start_index[r] < 0 || samples[i].value > samples[start_index[r]].value) {
        start_index[r] = i;
      }
    }
  }

  std::vector<RefineOutcome> refined(restarts);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int r = 0; r < restarts; ++r) {
    if (start_index[r] < 0) continue;
    std::mt19937_64 stream =
        substream(cfg.seed, static_cast<std::uint64_t>(start_index[r]));
    const UnitaryMatrix u = haar_unitary(d, stream);
    refined[r] =
        refine(inst, u.entries(), samples[start_index[r]].value, cfg.refine_sweeps);
  }

  // Deterministic reduction: value first, then restart index.
  int best_r = -1;
  for (int r = 0; r < restarts; ++r) {
    if (!refined[r].started) continue;
    if (best_r < 0 || refined[r].value > refined[best_r].value) best_r = r;
  }

  SearchResult result;
  result.best_value = refined[best_r].value;
  result.best_unitary = UnitaryMatrix::unchecked(std::move(refined[best_r].unitary));
  result.evaluations = cfg.samples;
  for (const RefineOutcome& out : refined) result.evaluations += out.evaluations;
  result.admissible_fraction =
      static_cast<double>(admissible_count) / static_cast<double>(cfg.samples);
  return result;
}

SearchResult maximize_over_unitaries(const StateObjective& objective,
                                     const ThermalState& t,
                                     const CostPredicate& admissible,
                                     const SearchConfig& cfg) {
  return maximize_over_unitaries_diagonal(objective, t.populations(),
                                          t.hamiltonian().energies(), admissible, cfg);
}

}  // namespace thermcoh
