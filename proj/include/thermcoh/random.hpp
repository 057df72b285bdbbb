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

#ifndef THERMCOH_RANDOM_HPP_
#define THERMCOH_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "thermcoh/quantum_core.hpp"

namespace thermcoh {

/// SplitMix64 step; the mixing function behind substream derivation.
std::uint64_t splitmix64(std::uint64_t& state);

/// Independent, reproducible stream number `index` of a master seed.
/// Substreams make sample loops order-independent, so parallel and serial
/// execution see identical randomness.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

/// Haar-distributed random unitary: QR of a complex Ginibre matrix with the
/// R-diagonal phases absorbed into Q. Deterministic for a fixed stream state.
UnitaryMatrix haar_unitary(int dim, std::mt19937_64& stream);

/// Random density matrix: Haar eigenvectors over a random simplex spectrum.
DensityMatrix random_density_matrix(int dim, std::mt19937_64& stream);

}  // namespace thermcoh

#endif  // THERMCOH_RANDOM_HPP_
