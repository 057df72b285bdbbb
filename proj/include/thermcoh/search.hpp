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

#ifndef THERMCOH_SEARCH_HPP_
#define THERMCOH_SEARCH_HPP_

#include <cstdint>
#include <functional>

#include "thermcoh/quantum_core.hpp"
#include "thermcoh/thermal.hpp"

namespace thermcoh {

/// Serial runs are the reference implementation; parallel runs distribute
/// samples and restarts over OpenMP threads. Both produce identical results
/// because every sample owns its own substream and the reduction is a
/// deterministic (value, index) comparison.
enum class Execution { serial, parallel };

struct SearchConfig {
  int samples = 10000;
  int restarts = 4;
  std::uint64_t seed = 1;
  double energy_window = 1e-3;  // admissibility slack used by callers
  int refine_sweeps = 400;      // cap on accepted refinement sweeps per restart
  Execution execution = Execution::parallel;
};

struct SearchResult {
  double best_value = 0.0;
  UnitaryMatrix best_unitary;
  long long evaluations = 0;
  double admissible_fraction = 0.0;
};

/// Objective evaluated on the conjugated state. The matrix handed in is a
/// valid density matrix by construction.
using StateObjective = std::function<double(const DensityMatrix&)>;

/// Admissibility of a candidate, judged by its energy cost on the source
/// thermal state.
using CostPredicate = std::function<bool(double)>;

/// Brute-force certification engine: Haar sampling followed by
/// derivative-free refinement (phased plane rotations with a shrinking step,
/// greedily accepted, monotone in the objective). Restart r refines the best
/// admissible sample of its chunk of the sample range. Raises
/// NoAdmissibleSample when no sample passes the predicate.
SearchResult maximize_over_unitaries(const StateObjective& objective,
                                     const ThermalState& t,
                                     const CostPredicate& admissible,
                                     const SearchConfig& cfg);

/// Same engine for any diagonal input state, described by its populations
/// and the diagonal energies in the same basis order. Used for composite
/// systems whose tensor-ordered energies need not be ascending.
SearchResult maximize_over_unitaries_diagonal(const StateObjective& objective,
                                              const RealVector& populations,
                                              const std::vector<double>& energies,
                                              const CostPredicate& admissible,
                                              const SearchConfig& cfg);

}  // namespace thermcoh

#endif  // THERMCOH_SEARCH_HPP_
