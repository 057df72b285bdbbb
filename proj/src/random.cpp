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

#include "thermcoh/random.hpp"

#include <cmath>

namespace thermcoh {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  std::uint64_t mixed = splitmix64(state);
  state ^= index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
  mixed ^= splitmix64(state);
  return std::mt19937_64(mixed);
}

UnitaryMatrix haar_unitary(int dim, std::mt19937_64& stream) {
  if (dim < 2 || dim > kMaxDim) {
    throw InvalidDimension("haar_unitary: dim must be in [2, 16]");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix ginibre(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = gauss(stream);
      const double im = gauss(stream);
      ginibre(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR so the distribution is exactly Haar.
  for (int j = 0; j < dim; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    q.col(j) *= (mag > 0.0) ? diag / mag : Complex(1.0, 0.0);
  }
  return UnitaryMatrix::unchecked(std::move(q));
}

DensityMatrix random_density_matrix(int dim, std::mt19937_64& stream) {
  std::exponential_distribution<double> expo(1.0);
  RealVector weights(dim);
  for (int i = 0; i < dim; ++i) weights[i] = expo(stream);
  weights /= weights.sum();
  const UnitaryMatrix v = haar_unitary(dim, stream);
  return DensityMatrix::unchecked(v.entries() * weights.cast<Complex>().asDiagonal() *
                                  v.entries().adjoint());
}

}  // namespace thermcoh
