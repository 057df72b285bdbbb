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

#include "thermcoh/coherence.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace thermcoh {

double relative_entropy_of_coherence(const DensityMatrix& rho) {
  const double diag_entropy = shannon_entropy_bits(rho.populations());
  const double s = von_neumann_entropy(rho);
  // Nonnegative up to roundoff; clamp the roundoff.
  return std::max(0.0, diag_entropy - s);
}

std::vector<Vector> maximally_coherent_basis(int dim) {
  if (dim < 2) {
    throw InvalidDimension("maximally_coherent_basis: dim must be >= 2");
  }
  if (dim > kMaxDim) {
    throw InvalidDimension("maximally_coherent_basis: dim exceeds " +
                           std::to_string(kMaxDim));
  }
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Vector> basis;
  basis.reserve(dim);
  for (int j = 0; j < dim; ++j) {
    Vector phi(dim);
    for (int m = 0; m < dim; ++m) {
      const double angle = 2.0 * std::numbers::pi * m * j / dim;
      phi[m] = inv_sqrt_d * Complex(std::cos(angle), std::sin(angle));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

UnitaryMatrix max_coherence_unitary(int dim) {
  const std::vector<Vector> basis = maximally_coherent_basis(dim);
  Matrix u(dim, dim);
  for (int j = 0; j < dim; ++j) u.col(j) = basis[j];
  return UnitaryMatrix(std::move(u));
}

double energy_cost(const UnitaryMatrix& v, const ThermalState& t) {
  if (v.dim() != t.hamiltonian().dim()) {
    throw DimensionMismatch("energy_cost: unitary dim " + std::to_string(v.dim()) +
                            " vs system dim " + std::to_string(t.hamiltonian().dim()));
  }
  const DensityMatrix rho_f = conjugate(t.state(), v);
  return average_energy(rho_f, t.hamiltonian()) - t.average_energy();
}

RealMatrix induced_doubly_stochastic(const UnitaryMatrix& u) {
  return u.entries().cwiseAbs2();
}

CoherenceReport coherence_report(const ThermalState& t, const UnitaryMatrix& v) {
  const DensityMatrix rho_f = conjugate(t.state(), v);
  CoherenceReport report;
  report.c_r = relative_entropy_of_coherence(rho_f);
  report.bound = std::log2(static_cast<double>(t.hamiltonian().dim())) - t.entropy_bits();
  report.gap = report.bound - report.c_r;
  report.energy_cost = average_energy(rho_f, t.hamiltonian()) - t.average_energy();
  if (report.c_r < -kValidityTol || report.gap < -kNumericTol) {
    throw InvalidState("coherence_report: bound violated beyond tolerance");
  }
  return report;
}

}  // namespace thermcoh
