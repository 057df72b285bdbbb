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

#ifndef THERMCOH_QUANTUM_CORE_HPP_
#define THERMCOH_QUANTUM_CORE_HPP_

#include <Eigen/Dense>
#include <complex>

#include "thermcoh/errors.hpp"

namespace thermcoh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Tolerance scheme: type invariants are validated at kValidityTol, derived
// numerical assertions use kNumericTol. Dense double precision, dim <= 16.
inline constexpr double kValidityTol = 1e-10;
inline constexpr double kNumericTol = 1e-8;
inline constexpr int kMaxDim = 16;

/// Hermitian, positive semi-definite, unit-trace complex matrix in the fixed
/// reference basis (index 0 = ground state). Immutable after construction.
class DensityMatrix {
 public:
  /// Empty placeholder; any real state comes from the validating paths below.
  DensityMatrix() = default;

  /// Validates Hermiticity, unit trace and positivity within `tol`.
  explicit DensityMatrix(Matrix entries, double tol = kValidityTol);

  /// Diagonal state from a population vector (entries >= -tol, sum within
  /// tol of 1). Cheaper than the general constructor: no eigensolve needed.
  static DensityMatrix diagonal(const RealVector& populations,
                                double tol = kValidityTol);

  /// Wraps a matrix the caller guarantees to be a valid state. Used on hot
  /// paths where validity holds by construction (e.g. unitary conjugation).
  static DensityMatrix unchecked(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  RealVector populations() const { return entries_.diagonal().real(); }

 private:
  Matrix entries_;
};

/// d x d complex matrix with U^dag U = I within kValidityTol (max norm).
class UnitaryMatrix {
 public:
  UnitaryMatrix() = default;
  explicit UnitaryMatrix(Matrix entries, double tol = kValidityTol);
  static UnitaryMatrix unchecked(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

/// Eigendecomposition with eigenvalues sorted descending and matching
/// orthonormal eigenvector columns.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

/// Shannon entropy of a probability vector, in bits. Entries in
/// [-kValidityTol, 0) are clamped to zero; larger negatives raise
/// InvalidState. 0 log 0 := 0.
double shannon_entropy_bits(const RealVector& probs);

/// Von Neumann entropy in bits (base-2 logarithms throughout the library).
/// Result lies in [0, log2 d].
double von_neumann_entropy(const DensityMatrix& rho);

/// Projects onto the diagonal in the reference basis. Idempotent and
/// trace preserving.
DensityMatrix dephase(const DensityMatrix& rho);

/// U rho U^dag. Preserves the spectrum.
DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryMatrix& u);

/// Full spectral decomposition, eigenvalues descending.
Spectrum spectrum_of(const DensityMatrix& rho);

// Plumbing shared by entropies, trace norms and the correlation module.
// `a` must be Hermitian; results are sorted descending.
RealVector hermitian_eigenvalues(const Matrix& a);

/// Trace norm (sum of absolute eigenvalues) of a Hermitian matrix.
double trace_norm(const Matrix& hermitian);

}  // namespace thermcoh

#endif  // THERMCOH_QUANTUM_CORE_HPP_
