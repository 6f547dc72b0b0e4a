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

#include <cmath>

#include "duality/config.hpp"
#include "duality/states.hpp"
#include "test_util.hpp"

namespace duality {
namespace {

TEST(Rng, StreamsAreReproducibleAndDistinct) {
    Rng a = Rng::stream(42, 0), b = Rng::stream(42, 0), c = Rng::stream(42, 1);
    for (int i = 0; i < 10; ++i) {
        const auto x = a.next_u64();
        EXPECT_EQ(x, b.next_u64());
        EXPECT_NE(x, c.next_u64());
    }
}

TEST(Rng, UniformAndIndexRanges) {
    Rng rng(1);
    double sum = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        ASSERT_LT(rng.uniform_index(7), 7u);
    }
    EXPECT_NEAR(sum / 20000.0, 0.5, 0.01);
}

TEST(Rng, NormalMoments) {
    Rng rng(2);
    double m1 = 0.0, m2 = 0.0;
    const int n = 40000;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        m1 += x;
        m2 += x * x;
    }
    EXPECT_NEAR(m1 / n, 0.0, 0.02);
    EXPECT_NEAR(m2 / n, 1.0, 0.03);
}

TEST(DensityMatrix, ValidatesTraceAndPositivity) {
    EXPECT_THROW(DensityMatrix(2, 1, CMatrix(CMatrix::Identity(2, 2))), ContractError);
    EXPECT_THROW(DensityMatrix(2, 1, CMatrix(HermitianMatrix::diagonal({1.5, -0.5}).matrix())), ContractError);
    EXPECT_THROW(DensityMatrix(2, 2, CMatrix(CMatrix::Identity(3, 3) / 3.0)), ContractError);
    EXPECT_NO_THROW(DensityMatrix(2, 2, CMatrix(CMatrix::Identity(4, 4) / 4.0)));
}

TEST(DensityMatrix, MaximallyMixedValues) {
    const DensityMatrix rho(3, 2, CMatrix(CMatrix::Identity(6, 6) / 6.0));
    EXPECT_NEAR(rho.purity(), 1.0 / 6.0, 1e-15);
    EXPECT_LT(max_abs_diff(rho.reduced_a().matrix(), CMatrix::Identity(3, 3) / 3.0), 1e-15);
    EXPECT_LT(max_abs_diff(rho.reduced_b().matrix(), CMatrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(PureBipartite, RejectsUnnormalized) {
    EXPECT_THROW(PureBipartite(CMatrix::Ones(2, 2)), ContractError);
}

TEST(PureBipartite, BranchesAndWeights) {
    CMatrix a(2, 2);
    a << std::sqrt(0.3), 0.0, Complex(0.0, std::sqrt(0.35)), std::sqrt(0.35);
    const PureBipartite psi(a);
    const auto w = psi.path_weights();
    EXPECT_NEAR(w[0], 0.3, 1e-15);
    EXPECT_NEAR(w[1], 0.7, 1e-15);
    EXPECT_NEAR(psi.branch(1).norm(), 1.0, 1e-15);
    const CMatrix ov = psi.branch_overlaps();
    EXPECT_NEAR(std::abs(ov(0, 1)), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(psi.density().purity(), 1.0, 1e-14);
    EXPECT_LT(max_abs_diff(psi.reduced_a().matrix(), psi.density().reduced_a().matrix()), 1e-15);
}

TEST(PureBipartite, EmptyBranchIsStillUnitVector) {
    CMatrix a = CMatrix::Zero(2, 3);
    a(0, 1) = 1.0;
    const PureBipartite psi(a);
    EXPECT_NEAR(psi.branch(1).norm(), 1.0, 1e-15);
}

TEST(RandomPure, DeterministicPerSeed) {
    const auto a = random_pure(3, 2, 99);
    const auto b = random_pure(3, 2, 99);
    const auto c = random_pure(3, 2, 100);
    EXPECT_EQ(a.amplitudes(), b.amplitudes());
    EXPECT_GT(max_abs_diff(a.amplitudes(), c.amplitudes()), 1e-3);
    EXPECT_THROW(random_pure(1, 2, 1), ContractError);
}

TEST(RandomPure, HaarMarginalPurityMean) {
    // E[Tr rho_A^2] for Haar states on C^a (x) C^b is (a + b) / (ab + 1).
    Rng rng(2024);
    const int samples = 20000;
    double total = 0.0;
    for (int i = 0; i < samples; ++i) total += random_pure(2, 2, rng).reduced_a().trace_square();
    EXPECT_NEAR(total / samples, 0.8, 0.02);
    double total3 = 0.0;
    for (int i = 0; i < 5000; ++i) total3 += random_pure(3, 2, rng).reduced_a().trace_square();
    EXPECT_NEAR(total3 / 5000, 5.0 / 7.0, 0.02);
}

TEST(RandomMixed, ValidAndOfRequestedRank) {
    Rng rng(8);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::size_t m = 1; m <= 3; ++m) {
            for (std::size_t rank = 1; rank <= n * m; ++rank) {
                const auto rho = random_mixed(n, m, rank, rng);
                EXPECT_NEAR(rho.hermitian().trace(), 1.0, 1e-12);
                const RVector ev = eigvals_hermitian(rho.hermitian());
                EXPECT_GE(ev.minCoeff(), -1e-12);
                std::size_t positive = 0;
                for (Eigen::Index i = 0; i < ev.size(); ++i) positive += ev(i) > 1e-9 ? 1 : 0;
                EXPECT_EQ(positive, rank);
                EXPECT_LE(rho.purity(), 1.0 + 1e-12);
                EXPECT_GE(rho.purity(), 1.0 / static_cast<double>(n * m) - 1e-12);
            }
        }
    }
    EXPECT_THROW(random_mixed(2, 2, 5, rng), ContractError);
}

TEST(RandomUnitary, IsUnitary) {
    Rng rng(4);
    for (std::size_t d = 1; d <= 6; ++d) {
        const CMatrix u = random_unitary(d, rng);
        EXPECT_LT(max_abs_diff(u.adjoint() * u, CMatrix::Identity(u.rows(), u.cols())), 1e-12);
    }
}

TEST(Werner, PurityAndMarginals) {
    for (double p : {0.0, 0.2, 1.0 / 3.0, 0.7, 1.0}) {
        const auto rho = werner(p);
        EXPECT_NEAR(rho.purity(), (1.0 + 3.0 * p * p) / 4.0, 1e-14);
        EXPECT_LT(max_abs_diff(rho.reduced_a().matrix(), CMatrix::Identity(2, 2) / 2.0), 1e-15);
    }
    EXPECT_THROW(werner(1.1), ContractError);
}

TEST(Example1State, Overlap) {
    const auto psi = example1_state(0.3, 0.64, 0.4);
    const auto w = psi.path_weights();
    EXPECT_NEAR(w[0], 0.3, 1e-15);
    EXPECT_NEAR(std::norm(psi.branch_overlaps()(0, 1)), 0.64, 1e-14);
}

TEST(ThreePathState, Marginal) {
    const auto psi = threepath_example_state(0.6, 0.9);
    const CMatrix ra = psi.reduced_a().matrix();
    EXPECT_NEAR(ra(0, 0).real(), 0.2, 1e-15);
    EXPECT_NEAR(ra(1, 1).real(), 0.3, 1e-15);
    EXPECT_NEAR(std::abs(ra(0, 1)), std::sqrt(0.6 * 0.9) / 3.0, 1e-15);
    EXPECT_NEAR(std::abs(ra(0, 2)), 0.0, 1e-15);
}

TEST(DensityJson, RoundTrip) {
    const auto rho = random_mixed(2, 3, 4, 5);
    const auto back = density_from_json(density_to_json(rho));
    EXPECT_EQ(back.dim_a(), 2u);
    EXPECT_EQ(back.dim_b(), 3u);
    EXPECT_LT(max_abs_diff(back.matrix(), rho.matrix()), 1e-15);
    EXPECT_THROW(density_from_json(R"({"dim_a": 1, "dim_b": 1, "re": [[1]]})"), ContractError);
}

}  // namespace
}  // namespace duality
