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

// Minimum-error discrimination of the detector states {q_i, |d_i>}.

#include <cstddef>
#include <optional>
#include <vector>

#include "duality/config.hpp"
#include "duality/interferometer.hpp"
#include "duality/qmat.hpp"

namespace duality {

/// Prior-weighted pure states, described by their Gram matrix.
class Ensemble {
public:
    /// Priors must be >= -1e-12 and sum to 1 within Tolerances::priors; small
    /// negative priors are clamped to zero.
    Ensemble(std::vector<double> priors, DetectorConfig detectors,
             const Tolerances& tol = kDefaultTolerances);

    /// Detector states weighted by the path populations q_i = (rho_A)_ii.
    static Ensemble from_output(const InterferometerOutput& out, const DetectorConfig& det);

    std::size_t n() const { return priors_.size(); }
    const std::vector<double>& priors() const { return priors_; }
    const DetectorConfig& detectors() const { return detectors_; }
    const CMatrix& gram() const { return detectors_.gram(); }

private:
    std::vector<double> priors_;
    DetectorConfig detectors_;
};

/// One POVM element per state, acting on the span of the detector vectors
/// (dimension rank(G)), in the basis used by DetectorConfig::vectors().
using Povm = std::vector<CMatrix>;

/// sum_i q_i <d_i|Pi_i|d_i> for explicit detector vectors (columns).
double success_probability(const Ensemble& e, const CMatrix& vectors, const Povm& povm);

/// Largest violation of positivity or completeness (sum Pi_i = I).
double povm_defect(const Povm& povm);

/// 1/n + 1/(2n) sum_{i != k} ||q_i d_i d_i^dagger - q_k d_k d_k^dagger||_1, with the
/// trace norm in its two-state closed form.
double ps_upper_bound(const Ensemble& e);

/// Exact two-state optimum 1/2 + 1/2 ||q_1 d_1 d_1^dagger - q_2 d_2 d_2^dagger||_1 from
/// explicit vectors. Throws ContractError unless n = 2.
double ps_helstrom_n2(const Ensemble& e);

/// Square-root ("pretty good") measurement success probability.
double ps_pgm(const Ensemble& e);

struct OptimizeOptions {
    std::size_t max_iter = 5000;
    double tol = 1e-10;
    bool keep_history = false;
};

struct OptimizeResult {
    double value = 0.0;
    Povm povm;
    std::size_t iterations = 0;
    bool converged = false;
    /// Success value after every accepted step (first entry is the PGM seed).
    std::vector<double> history;
};

/// Iterates the fixed point Pi_i <- G^{-1/2} q_i^2 rho_i Pi_i rho_i G^{-1/2} with
/// G = sum_j q_j^2 rho_j Pi_j rho_j, starting from the square-root measurement.
/// Steps that lower the success value are damped by halving. Exhausting
/// max_iter returns converged = false rather than throwing.
OptimizeResult ps_optimize(const Ensemble& e, const OptimizeOptions& options = {});

struct DiscriminationResult {
    double ps_upper;
    std::optional<double> ps_exact;
    double ps_pgm;
    double ps_opt;
    std::size_t iterations;
    bool converged;
};

DiscriminationResult discriminate(const Ensemble& e, const OptimizeOptions& options = {});

}  // namespace duality
