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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "duality/config.hpp"
#include "duality/discrimination.hpp"
#include "test_util.hpp"

namespace duality {
namespace {

using testing::helstrom_pure;
using testing::symmetric_optimum;

std::vector<double> random_priors(std::size_t n, Rng& rng) {
    std::vector<double> q(n);
    for (auto& x : q) x = -std::log(1.0 - rng.uniform());
    const double s = std::accumulate(q.begin(), q.end(), 0.0);
    for (auto& x : q) x /= s;
    return q;
}

Ensemble random_ensemble(std::size_t n, Rng& rng) {
    auto q = random_priors(n, rng);
    return Ensemble(std::move(q), DetectorConfig::random(n, 1 + rng.uniform_index(n), rng));
}

TEST(Ensemble, Validation) {
    EXPECT_THROW(Ensemble({0.5, 0.6}, DetectorConfig::orthogonal(2)), ContractError);
    EXPECT_THROW(Ensemble({1.0}, DetectorConfig::orthogonal(2)), ContractError);
    EXPECT_THROW(Ensemble({1.1, -0.1}, DetectorConfig::orthogonal(2)), ContractError);
    const Ensemble e({1.0 + 1e-13, -1e-13}, DetectorConfig::orthogonal(2));
    EXPECT_GE(e.priors()[1], 0.0);
}

TEST(UpperBound, KnownValues) {
    EXPECT_NEAR(ps_upper_bound(Ensemble({0.5, 0.5}, DetectorConfig::orthogonal(2))), 1.0, 1e-15);
    EXPECT_NEAR(ps_upper_bound(Ensemble({0.5, 0.5}, DetectorConfig::two_path(std::sqrt(0.5)))),
                0.5 + 0.5 * std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(ps_upper_bound(Ensemble({0.5, 0.5}, DetectorConfig::two_path(std::sqrt(0.5)))), 0.8535533905932737,
                1e-12);
    // Identical states: 1/n + (1/2n) sum_{i != k} |q_i - q_k|.
    const std::vector<double> q = {0.5, 0.3, 0.2};
    double s = 0.0;
    for (double a : q)
        for (double b : q) s += std::abs(a - b);
    EXPECT_NEAR(ps_upper_bound(Ensemble(q, DetectorConfig(CMatrix::Ones(3, 3)))), 1.0 / 3.0 + s / 6.0, 1e-15);
}

TEST(UpperBound, AtLeastOneOverN) {
    Rng rng(51);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + rng.uniform_index(5);
        EXPECT_GE(ps_upper_bound(random_ensemble(n, rng)), 1.0 / static_cast<double>(n) - 1e-15);
    }
}

TEST(UpperBound, PermutationInvariant) {
    Rng rng(52);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng.uniform_index(4);
        const auto e = random_ensemble(n, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), std::mt19937(static_cast<unsigned>(t)));
        CMatrix g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        std::vector<double> q(n);
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = e.priors()[static_cast<std::size_t>(perm[i])];
            for (std::size_t k = 0; k < n; ++k) g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = e.gram()(perm[i], perm[k]);
        }
        const Ensemble permuted(q, DetectorConfig(g));
        EXPECT_NEAR(ps_upper_bound(permuted), ps_upper_bound(e), 1e-14);
        EXPECT_NEAR(ps_optimize(permuted).value, ps_optimize(e).value, 1e-8);
    }
}

TEST(Helstrom, ClosedFormAndIdentity) {
    Rng rng(53);
    for (int t = 0; t < 500; ++t) {
        const auto e = random_ensemble(2, rng);
        const double expect = helstrom_pure(e.priors()[0], e.priors()[1], e.detectors().overlap_sq(0, 1));
        EXPECT_NEAR(ps_helstrom_n2(e), expect, 1e-12);
        EXPECT_NEAR(ps_helstrom_n2(e), ps_upper_bound(e), 1e-12);
    }
    EXPECT_NEAR(ps_helstrom_n2(Ensemble({0.5, 0.5}, DetectorConfig::two_path(std::sqrt(0.5)))), 0.853553390593, 1e-12);
    EXPECT_THROW(ps_helstrom_n2(Ensemble({0.2, 0.3, 0.5}, DetectorConfig::orthogonal(3))), ContractError);
}

TEST(Pgm, OptimalForSymmetricEquiprobableStates) {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (double s : {0.0, 0.1, 0.5, 0.9}) {
            const Ensemble e(std::vector<double>(n, 1.0 / static_cast<double>(n)),
                             DetectorConfig::uniform_overlap(n, s * s));
            EXPECT_NEAR(ps_pgm(e), symmetric_optimum(n, s), 1e-10) << "n=" << n << " s=" << s;
            EXPECT_NEAR(ps_optimize(e).value, symmetric_optimum(n, s), 1e-8);
        }
    }
}

TEST(Pgm, IdenticalStates) {
    const std::vector<double> q = {0.5, 0.3, 0.2};
    const Ensemble e(q, DetectorConfig(CMatrix::Ones(3, 3)));
    EXPECT_LE(ps_pgm(e), ps_optimize(e).value + 1e-12);
    EXPECT_NEAR(ps_optimize(e).value, 0.5, 1e-8);
}

TEST(Optimize, OrthogonalStatesAreDistinguishable) {
    for (std::size_t n = 2; n <= 5; ++n) {
        Rng rng(54 + n);
        const Ensemble e(random_priors(n, rng), DetectorConfig::orthogonal(n));
        EXPECT_NEAR(ps_optimize(e).value, 1.0, 1e-8);
    }
}

TEST(Optimize, ZeroPriorsAreIgnored) {
    const Ensemble e({0.6, 0.0, 0.4}, DetectorConfig::uniform_overlap(3, 0.3));
    const auto r = ps_optimize(e);
    const Ensemble two({0.6, 0.4}, DetectorConfig::uniform_overlap(2, 0.3));
    EXPECT_NEAR(r.value, ps_helstrom_n2(two), 1e-6);
}

TEST(Optimize, FeasibleMonotoneAndMatchesHelstrom) {
    Rng rng(55);
    OptimizeOptions opts;
    opts.keep_history = true;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 + rng.uniform_index(4);
        const auto e = random_ensemble(n, rng);
        const auto r = ps_optimize(e, opts);
        EXPECT_TRUE(r.converged);
        EXPECT_LE(povm_defect(r.povm), 1e-8);
        EXPECT_NEAR(success_probability(e, e.detectors().vectors(), r.povm), r.value, 1e-10);
        for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_GE(r.history[i], r.history[i - 1] - 1e-12);
        if (n == 2) EXPECT_NEAR(r.value, ps_helstrom_n2(e), 1e-6);
    }
}

TEST(Discriminate, Sandwich) {
    Rng rng(56);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 2 + rng.uniform_index(4);
        const auto e = random_ensemble(n, rng);
        const auto r = discriminate(e);
        const double qmax = *std::max_element(e.priors().begin(), e.priors().end());
        EXPECT_GE(r.ps_opt, qmax - 1e-9) << "n=" << n << " rank=" << e.detectors().vectors().rows()
                                         << " iterations=" << r.iterations << " gap=" << qmax - r.ps_opt;
        EXPECT_LE(r.ps_pgm, r.ps_opt + 1e-12);
        EXPECT_LE(r.ps_opt, r.ps_upper + 1e-8);
        EXPECT_LE(r.ps_upper, 1.0 + 1e-12);
        EXPECT_EQ(r.ps_exact.has_value(), n == 2);
        if (r.ps_exact) {
            EXPECT_LE(r.ps_opt, *r.ps_exact + 1e-9);
            EXPECT_LE(*r.ps_exact, r.ps_upper + 1e-9);
        }
    }
}

}  // namespace
}  // namespace duality
