// Copyright 2026 The eapm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EAPM_TOLERANCES_HPP
#define EAPM_TOLERANCES_HPP

#include <stdexcept>
#include <string>

namespace eapm {

/// Every numerical tolerance used by the library lives here.
namespace tol {
inline constexpr double equality = 1e-9;
inline constexpr double hermitian = 1e-10;
inline constexpr double hermitian_tag = 1e-12;
inline constexpr double unit_norm = 1e-12;
inline constexpr double probability_floor = 1e-12;
inline constexpr double normalization = 1e-9;
inline constexpr double psd = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double povm_sum = 1e-9;
inline constexpr double isometry = 1e-10;
inline constexpr double bloch_norm = 1e-12;
inline constexpr double povm_certificate = 1e-7;
inline constexpr double degenerate_singular = 1e-12;
inline constexpr double gram_edge = 1e-8;
inline constexpr double gram_real = 1e-8;
inline constexpr double gram_rank = 1e-7;
inline constexpr double monotone_slack = 1e-12;
}  // namespace tol

struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegeneratePolar : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration would exceed the configured cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eapm

#endif
