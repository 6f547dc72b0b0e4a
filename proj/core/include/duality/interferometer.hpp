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

// Which-path detectors coupled to the path register by the controlled unitary
// |i>_A |d_0>_D -> |i>_A |d_i>_D.

#include <cstddef>
#include <string>
#include <vector>

#include "duality/config.hpp"
#include "duality/qmat.hpp"
#include "duality/rng.hpp"
#include "duality/states.hpp"

namespace duality {

/// n pure detector states, stored by their Gram matrix G(i,k) = <d_k|d_i>.
class DetectorConfig {
public:
    /// Validates Hermitian, unit diagonal and PSD; throws ContractError.
    explicit DetectorConfig(const CMatrix& gram, const Tolerances& tol = kDefaultTolerances);

    /// Gram of the columns of `vectors` (each normalized first).
    static DetectorConfig from_vectors(const CMatrix& vectors);
    /// All off-diagonal overlaps equal to sqrt(c), real and nonnegative.
    static DetectorConfig uniform_overlap(std::size_t n, double c);
    /// Mutually orthogonal detector states.
    static DetectorConfig orthogonal(std::size_t n);
    /// n = 2 with <d_2|d_1> = overlap.
    static DetectorConfig two_path(Complex overlap);
    /// Gram of n Haar-random unit vectors in C^dim.
    static DetectorConfig random(std::size_t n, std::size_t dim, Rng& rng);

    std::size_t n() const { return static_cast<std::size_t>(gram_.rows()); }
    const CMatrix& gram() const { return gram_; }
    /// |G(i,k)|^2.
    double overlap_sq(std::size_t i, std::size_t k) const;

    /// Explicit detector vectors (columns), realized in C^rank(G).
    CMatrix vectors() const { return gram_to_vectors(gram_); }

private:
    CMatrix gram_;
};

std::string detectors_to_json(const DetectorConfig& det);
/// JSON {n, gram_re[][], gram_im[][]}.
DetectorConfig detectors_from_json(const std::string& text, const Tolerances& tol = kDefaultTolerances);

/// Post-interaction quantities shared by every relation.
struct InterferometerOutput {
    /// rho~_AB = Tr_D rho~_ABD; block (i,k) is G(i,k) B_ik.
    DensityMatrix rho_ab_tilde;
    /// rho~_A = G o rho_A (entrywise product).
    HermitianMatrix rho_a_tilde;
    /// Pre-interaction marginal rho_A.
    HermitianMatrix rho_a;
    /// q_i = (rho_A)_ii; the detector-state priors.
    std::vector<double> q;
    /// Tr rho~_D^2 = sum_ik q_i q_k |G(i,k)|^2.
    double purity_d;
    double purity_a;
    double purity_ab;
};

/// Reference path: Schur-product form of the detector coupling.
/// Throws ContractError when rho.dim_a() != det.n().
InterferometerOutput apply_detectors(const DensityMatrix& rho, const DetectorConfig& det);

/// Explicit rho~_ABD on A (x) B (x) D with D = C^rank(G). Test oracle for
/// apply_detectors; cost grows as (n m r)^2.
DensityMatrix build_tripartite(const DensityMatrix& rho, const DetectorConfig& det);

}  // namespace duality
