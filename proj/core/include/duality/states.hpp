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

// Bipartite input states: the path degree of freedom A (n paths) and the
// quantum memory B (dimension m; m = 1 means no memory).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "duality/config.hpp"
#include "duality/qmat.hpp"
#include "duality/rng.hpp"

namespace duality {

/// Unit-trace positive semidefinite operator on C^dim_a (x) C^dim_b.
class DensityMatrix {
public:
    /// Validates trace and positivity; throws ContractError on violation.
    DensityMatrix(std::size_t dim_a, std::size_t dim_b, HermitianMatrix matrix,
                  const Tolerances& tol = kDefaultTolerances);
    DensityMatrix(std::size_t dim_a, std::size_t dim_b, const CMatrix& matrix,
                  const Tolerances& tol = kDefaultTolerances);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    std::size_t dim() const { return dim_a_ * dim_b_; }
    const HermitianMatrix& hermitian() const { return matrix_; }
    const CMatrix& matrix() const { return matrix_.matrix(); }

    double purity() const { return matrix_.trace_square(); }
    HermitianMatrix reduced_a() const;
    HermitianMatrix reduced_b() const;

private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    HermitianMatrix matrix_;
};

/// |psi> = sum_ij a_ij |i>_A |e_j>_B = sum_i sqrt(p_i) |i>_A |u_i>_B.
class PureBipartite {
public:
    /// `amplitudes` is n x m with entry (i, j) = a_ij. Throws unless normalized.
    explicit PureBipartite(CMatrix amplitudes, const Tolerances& tol = kDefaultTolerances);

    std::size_t dim_a() const { return static_cast<std::size_t>(amps_.rows()); }
    std::size_t dim_b() const { return static_cast<std::size_t>(amps_.cols()); }
    const CMatrix& amplitudes() const { return amps_; }

    /// p_i = sum_j |a_ij|^2.
    const std::vector<double>& path_weights() const { return weights_; }
    /// Normalized |u_i>. Branches with p_i = 0 are set to |e_1>; they never
    /// contribute because every use is weighted by p_i.
    CVector branch(std::size_t i) const;
    /// Matrix with (i, j) = <u_j|u_i>.
    CMatrix branch_overlaps() const;

    /// Flattened state vector, basis index i*m + j.
    CVector vector() const;
    DensityMatrix density() const;
    /// Tr_B |psi><psi|.
    HermitianMatrix reduced_a() const;

private:
    CMatrix amps_;
    std::vector<double> weights_;
};

/// Haar-random pure state on C^n (x) C^m (normalized complex Gaussian vector).
PureBipartite random_pure(std::size_t n, std::size_t m, Rng& rng);
PureBipartite random_pure(std::size_t n, std::size_t m, std::uint64_t seed);

/// Ginibre mixed state G G^dagger / Tr(G G^dagger) with G of shape (n m) x rank.
DensityMatrix random_mixed(std::size_t n, std::size_t m, std::size_t rank, Rng& rng);
DensityMatrix random_mixed(std::size_t n, std::size_t m, std::size_t rank, std::uint64_t seed);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
CMatrix random_unitary(std::size_t dim, Rng& rng);

/// p |psi-><psi-| + (1 - p) I/4 with |psi-> = (|01> - |10>)/sqrt(2).
DensityMatrix werner(double p);

/// sqrt(p)|1>|u1> + sqrt(1-p)|2>|u2> with |<u1|u2>|^2 = c_u.
/// |u1> = |e1>, |u2> = e^{i phase} sqrt(c_u)|e1> + sqrt(1 - c_u)|e2>.
PureBipartite example1_state(double p, double c_u, double phase = 0.0);

/// sqrt(p/3)|1>|e1> + sqrt(q/3)|2>|e1> + sqrt((3-p-q)/3)|3>|e3>.
PureBipartite threepath_example_state(double p, double q);

/// JSON {dim_a, dim_b, re[][], im[][]} with row-major matrices.
std::string density_to_json(const DensityMatrix& rho);
/// Parses and validates; throws ContractError on malformed input.
DensityMatrix density_from_json(const std::string& text,
                                const Tolerances& tol = kDefaultTolerances);

}  // namespace duality
