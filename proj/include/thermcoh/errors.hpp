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

#ifndef THERMCOH_ERRORS_HPP_
#define THERMCOH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace thermcoh {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// State / matrix validity.
struct InvalidState : Error {
  using Error::Error;
};
struct InvalidDimension : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct ConvergenceFailure : Error {
  using Error::Error;
};

// Thermal inputs.
struct InvalidBeta : Error {
  using Error::Error;
};
struct EnergyOutOfRange : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};

// Budgeted protocols.
struct BudgetOutOfRange : Error {
  using Error::Error;
};
struct NotMajorized : Error {
  using Error::Error;
};
struct InfiniteTemperatureSource : Error {
  using Error::Error;
};
struct ValidityConditionViolated : Error {
  using Error::Error;
};
struct NotAProbabilityVector : Error {
  using Error::Error;
};

// Correlation comparisons.
struct DomainError : Error {
  using Error::Error;
};
struct EnergyMismatch : Error {
  using Error::Error;
};

// Search engine.
struct NoAdmissibleSample : Error {
  using Error::Error;
};

}  // namespace thermcoh

#endif  // THERMCOH_ERRORS_HPP_
