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

#include "thermcoh/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace thermcoh {

namespace {

void check_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw InvalidDimension(std::string(what) + ": matrix must be square and nonempty");
  }
  if (m.rows() > kMaxDim) {
    throw InvalidDimension(std::string(what) + ": dimension exceeds " +
                           std::to_string(kMaxDim));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix entries, double tol) {
  check_square(entries, "DensityMatrix");
  const double herm_err = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm_err <= tol)) {
    throw InvalidState("DensityMatrix: not Hermitian, max deviation " +
                       std::to_string(herm_err));
  }
  const double trace_err = std::abs(entries.trace() - Complex(1.0, 0.0));
  if (!(trace_err <= tol)) {
    throw InvalidState("DensityMatrix: trace differs from 1 by " +
                       std::to_string(trace_err));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("DensityMatrix: eigensolver failed during validation");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (!(min_eig >= -tol)) {
    throw InvalidState("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
  }
  entries_ = std::move(entries);
}

DensityMatrix DensityMatrix::diagonal(const RealVector& populations, double tol) {
  const int d = static_cast<int>(populations.size());
  if (d < 1 || d > kMaxDim) {
    throw InvalidDimension("DensityMatrix::diagonal: bad dimension " + std::to_string(d));
  }
  if (!(populations.minCoeff() >= -tol)) {
    throw InvalidState("DensityMatrix::diagonal: negative population");
  }
  if (!(std::abs(populations.sum() - 1.0) <= tol)) {
    throw InvalidState("DensityMatrix::diagonal: populations do not sum to 1");
  }
  DensityMatrix rho;
  rho.entries_ = populations.cast<Complex>().asDiagonal();
  return rho;
}

DensityMatrix DensityMatrix::unchecked(Matrix entries) {
  DensityMatrix rho;
  rho.entries_ = std::move(entries);
  return rho;
}

UnitaryMatrix::UnitaryMatrix(Matrix entries, double tol) {
  check_square(entries, "UnitaryMatrix");
  const int d = static_cast<int>(entries.rows());
  const double err =
      (entries.adjoint() * entries - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (!(err <= tol)) {
    throw InvalidState("UnitaryMatrix: U^dag U deviates from identity by " +
                       std::to_string(err));
  }
  entries_ = std::move(entries);
}

UnitaryMatrix UnitaryMatrix::unchecked(Matrix entries) {
  UnitaryMatrix u;
  u.entries_ = std::move(entries);
  return u;
}

double shannon_entropy_bits(const RealVector& probs) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    double p = probs[i];
    if (p < 0.0) {
      if (p < -kValidityTol) {
        throw InvalidState("entropy: probability " + std::to_string(p) +
                           " below clamping window");
      }
      p = 0.0;  // roundoff, not an invalid state
    }
    if (p > 0.0) s -= p * std::log2(p);
  }
  const double max_bits = std::log2(static_cast<double>(probs.size()));
  return std::clamp(s, 0.0, max_bits);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return shannon_entropy_bits(hermitian_eigenvalues(rho.entries()));
}

DensityMatrix dephase(const DensityMatrix& rho) {
  return DensityMatrix::diagonal(rho.populations());
}

DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryMatrix& u) {
  if (rho.dim() != u.dim()) {
    throw DimensionMismatch("conjugate: state dim " + std::to_string(rho.dim()) +
                            " vs unitary dim " + std::to_string(u.dim()));
  }
  // Validity is preserved by unitary conjugation up to roundoff.
  return DensityMatrix::unchecked(u.entries() * rho.entries() * u.entries().adjoint());
}

Spectrum spectrum_of(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("spectrum_of: eigensolver did not converge");
  }
  const int d = rho.dim();
  Spectrum spec;
  spec.eigenvalues = solver.eigenvalues().reverse();
  spec.eigenvectors = Matrix(d, d);
  for (int i = 0; i < d; ++i) {
    spec.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
  }
  const Matrix rebuilt = spec.eigenvectors *
                         spec.eigenvalues.cast<Complex>().asDiagonal() *
                         spec.eigenvectors.adjoint();
  const double err = (rebuilt - rho.entries()).cwiseAbs().maxCoeff();
  if (!(err <= 1e-9)) {
    throw ConvergenceFailure("spectrum_of: reconstruction error " + std::to_string(err));
  }
  return spec;
}

RealVector hermitian_eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("hermitian_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

double trace_norm(const Matrix& hermitian) {
  return hermitian_eigenvalues(hermitian).cwiseAbs().sum();
}

}  // namespace thermcoh
