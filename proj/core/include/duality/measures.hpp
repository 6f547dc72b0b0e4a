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

// Scalar wave, mixedness and entanglement quantities. The normalization
// dimension n is the number of paths, i.e. the dimension of the matrix the
// quantity is evaluated on unless stated otherwise.

#include <cstddef>
#include <string_view>
#include <utility>

#include "duality/config.hpp"
#include "duality/qmat.hpp"
#include "duality/states.hpp"

namespace duality {

enum class Measure { V, V2, X, X2, M, E, E2, Purity };

std::string_view measure_name(Measure m);

struct MeasureValue {
    Measure name;
    double value;
    std::size_t n;
};

/// Closed interval of admissible values for a measure at normalization n.
std::pair<double, double> measure_range(Measure m, std::size_t n);

/// True when the value lies in its range widened by `slack`.
bool in_range(const MeasureValue& v, double slack = 1e-10);

/// Sum over i != k of |rho_ik|^2 (the squared l2 coherence).
double coherence_l2_squared(const HermitianMatrix& rho);
/// Sum over i != k of |rho_ik| (the l1 coherence).
double coherence_l1(const HermitianMatrix& rho);

/// V^2 = 2(n-1)/n^2 * C_l2^2.
double visibility_v2(const HermitianMatrix& rho);
double visibility_v(const HermitianMatrix& rho);

/// X = C_l1 / n.
double visibility_x(const HermitianMatrix& rho);

/// Tr rho^2.
double purity(const HermitianMatrix& rho);

/// M = 2(n-1)/n^2 * (1 - Tr rho^2), with n = rho.dim() unless given.
double mixedness(const HermitianMatrix& rho);
double mixedness_from_purity(double purity, std::size_t n);

/// C = sqrt(2 (1 - Tr rho_A^2)).
double concurrence_pure(const PureBipartite& psi);

/// Closed-form concurrence of a two-qubit state. Throws UnsupportedDimension
/// unless dim_a = dim_b = 2.
double concurrence_wootters(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// E = sqrt(n-1)/n * C.
double entanglement_e(double concurrence, std::size_t n);

/// E^2 from path weights and branch overlaps:
/// 2(n-1)/n^2 * (1 - sum_ij p_i p_j |<u_j|u_i>|^2).
double entanglement_pure_formula(const PureBipartite& psi);

}  // namespace duality
