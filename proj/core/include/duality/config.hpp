// Copyright 2026 The duality-lab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace duality {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Every numerical tolerance used by the library, in one place.
///
/// Values are absolute. Functions that validate inputs take a
/// `const Tolerances&` defaulted to `kDefaultTolerances`.
struct Tolerances {
    /// Entrywise |M - M^dagger| allowed before a matrix is rejected as non-Hermitian.
    double hermitian = 1e-12;
    /// |Tr rho - 1| allowed for a density matrix.
    double trace = 1e-10;
    /// Smallest eigenvalue allowed for a density matrix is -psd.
    double psd = 1e-10;
    /// Smallest eigenvalue allowed for a detector Gram matrix is -gram_psd.
    double gram_psd = 1e-12;
    /// |G_ii - 1| allowed on the Gram diagonal.
    double gram_diagonal = 1e-12;
    /// |sum |a_ij|^2 - 1| allowed for a pure bipartite state.
    double pure_norm = 1e-12;
    /// Eigenvalues above -wootters_clip are clipped to zero before square roots.
    double wootters_clip = 1e-10;
    /// |sum q_i - 1| allowed for discrimination priors.
    double priors = 1e-10;
    /// Slack for inequality relations and bound for identity residuals.
    double relation = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

/// Thrown when an argument breaks an operation's documented precondition.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a quantity is requested for a dimension the library does not support,
/// e.g. mixed-state concurrence beyond two qubits.
class UnsupportedDimension : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace duality
