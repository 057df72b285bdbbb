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

#ifndef THERMCOH_COHERENCE_HPP_
#define THERMCOH_COHERENCE_HPP_

#include <vector>

#include "thermcoh/quantum_core.hpp"
#include "thermcoh/thermal.hpp"

namespace thermcoh {

/// Outcome of applying a coherence-creating unitary to a thermal state.
/// `bound` is log2 d - S(rho_T); `gap` = bound - c_r stays >= -1e-8.
struct CoherenceReport {
  double c_r;          // bits
  double bound;        // bits
  double gap;          // bits
  double energy_cost;  // energy units
};

/// Relative entropy of coherence S(dephase(rho)) - S(rho), in bits.
double relative_entropy_of_coherence(const DensityMatrix& rho);

/// The orthonormal family |phi_j> = Z^j |phi>, where |phi> is the uniform
/// superposition and Z multiplies component m by exp(2 pi i m / d). Every
/// member has all components of modulus 1/sqrt(d); the 0-th component of
/// each vector is fixed real positive.
std::vector<Vector> maximally_coherent_basis(int dim);

/// Unitary mapping basis state |j> to |phi_j>. Conjugating any diagonal
/// state by it yields a state whose dephasing is maximally mixed, so the
/// coherence bound log2 d - S is reached for every thermal input.
UnitaryMatrix max_coherence_unitary(int dim);

/// Average energy injected by applying v to the thermal state:
/// Tr[H (v rho v^dag - rho)].
double energy_cost(const UnitaryMatrix& v, const ThermalState& t);

/// M_ij = |<i|U|j>|^2. Doubly stochastic; maps the diagonal of any state to
/// the diagonal of its conjugation whenever the input is diagonal.
RealMatrix induced_doubly_stochastic(const UnitaryMatrix& u);

/// Applies v to t and reports coherence created, the saturation gap against
/// log2 d - S(rho_T), and the energy spent.
CoherenceReport coherence_report(const ThermalState& t, const UnitaryMatrix& v);

}  // namespace thermcoh

#endif  // THERMCOH_COHERENCE_HPP_
