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
#include <vector>

#include <Eigen/Eigenvalues>

#include "duality/config.hpp"
#include "duality/interferometer.hpp"
#include "duality/measures.hpp"
#include "duality/states.hpp"
#include "test_util.hpp"

namespace duality {
namespace {

using testing::loop_l1_offdiag;
using testing::loop_l2_offdiag_sq;
using testing::loop_trace_square;

HermitianMatrix uniform_superposition(std::size_t n) {
    return HermitianMatrix(CMatrix(CMatrix::Ones(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) /
                                   static_cast<double>(n)));
}

// Two-qubit concurrence for a pure state a|00> + b|01> + c|10> + d|11>.
double two_qubit_pure_concurrence(const CVector& v) { return 2.0 * std::abs(v(0) * v(3) - v(1) * v(2)); }

TEST(Visibility, UniformSuperpositionAndDiagonal) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const double nd = static_cast<double>(n);
        // |rho_ik| = 1/n off the diagonal.
        EXPECT_NEAR(visibility_v2(uniform_superposition(n)), 2.0 * (nd - 1.0) * (nd - 1.0) / (nd * nd * nd), 1e-14);
        EXPECT_NEAR(visibility_x(uniform_superposition(n)), (nd - 1.0) / nd, 1e-14);
        EXPECT_NEAR(visibility_v(HermitianMatrix::identity(n)), 0.0, 1e-15);
    }
    CMatrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    EXPECT_NEAR(visibility_v(HermitianMatrix(plus)), 0.5, 1e-15);
}

TEST(Visibility, MatchesLoopOracle) {
    Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng.uniform_index(5);
        const auto rho = random_mixed(n, 1, 1 + rng.uniform_index(n), rng);
        const CMatrix m = rho.matrix();
        const double nd = static_cast<double>(n);
        EXPECT_NEAR(coherence_l2_squared(rho.hermitian()), loop_l2_offdiag_sq(m), 1e-14);
        EXPECT_NEAR(coherence_l1(rho.hermitian()), loop_l1_offdiag(m), 1e-14);
        EXPECT_NEAR(visibility_v2(rho.hermitian()), 2.0 * (nd - 1.0) / (nd * nd) * loop_l2_offdiag_sq(m), 1e-14);
        EXPECT_NEAR(visibility_x(rho.hermitian()), loop_l1_offdiag(m) / nd, 1e-14);
        EXPECT_NEAR(visibility_v(rho.hermitian()) * visibility_v(rho.hermitian()),
                    visibility_v2(rho.hermitian()), 1e-14);
        const MeasureValue v{Measure::V2, visibility_v2(rho.hermitian()), n};
        EXPECT_TRUE(in_range(v));
    }
}

TEST(Mixedness, KnownValuesAndIdentity) {
    EXPECT_NEAR(mixedness(HermitianMatrix(CMatrix(CMatrix::Identity(2, 2) / 2.0))), 0.25, 1e-15);
    EXPECT_NEAR(mixedness(uniform_superposition(4)), 0.0, 1e-15);
    Rng rng(42);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng.uniform_index(5);
        const auto rho = random_mixed(n, 1, 1 + rng.uniform_index(n), rng);
        const double nd = static_cast<double>(n);
        const double pur = loop_trace_square(rho.matrix());
        EXPECT_NEAR(purity(rho.hermitian()), pur, 1e-14);
        const double m = mixedness(rho.hermitian());
        EXPECT_NEAR(m, mixedness_from_purity(pur, n), 1e-15);
        EXPECT_NEAR(m, 2.0 * (nd - 1.0) / (nd * nd) * (1.0 - pur), 1e-14);
        // The diagonal and off-diagonal parts of the purity split as mixedness plus visibility.
        double diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) diag += std::norm(rho.hermitian()(i, i));
        EXPECT_NEAR(m + visibility_v2(rho.hermitian()), 2.0 * (nd - 1.0) / (nd * nd) * (1.0 - diag), 1e-12);
        EXPECT_TRUE(in_range({Measure::M, m, n}));
    }
}

TEST(Concurrence, BellAndProductStates) {
    CVector bell = CVector::Zero(4);
    bell(1) = std::sqrt(0.5);
    bell(2) = -std::sqrt(0.5);
    const DensityMatrix singlet(2, 2, CMatrix(bell * bell.adjoint()));
    EXPECT_NEAR(concurrence_wootters(singlet), 1.0, 1e-10);
    const DensityMatrix product(2, 2, CMatrix(CMatrix::Identity(4, 4) / 4.0));
    EXPECT_NEAR(concurrence_wootters(product), 0.0, 1e-10);
}

TEST(Concurrence, Werner) {
    for (int s = 0; s <= 20; ++s) {
        const double p = s / 20.0;
        EXPECT_NEAR(concurrence_wootters(werner(p)), std::max(0.0, (3.0 * p - 1.0) / 2.0), 1e-9) << "p=" << p;
    }
}

TEST(Concurrence, PureStatesAgreeWithDeterminant) {
    Rng rng(43);
    for (int t = 0; t < 200; ++t) {
        const auto psi = random_pure(2, 2, rng);
        const double expect = two_qubit_pure_concurrence(psi.vector());
        EXPECT_NEAR(concurrence_pure(psi), expect, 1e-10);
        EXPECT_NEAR(concurrence_wootters(psi.density()), expect, 1e-10);
    }
}

// Textbook route: lambdas are square roots of the eigenvalues of rho (Y rho* Y), in decreasing order.
double concurrence_by_eigenvalues(const CMatrix& rho) {
    CMatrix yy = CMatrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const CMatrix r = rho * (yy * rho.conjugate() * yy);
    Eigen::ComplexEigenSolver<CMatrix> solver(r);
    std::vector<double> lam;
    for (Eigen::Index i = 0; i < 4; ++i) lam.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i).real())));
    std::sort(lam.rbegin(), lam.rend());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

TEST(Concurrence, FullRankStatesAgreeWithEigenvalueRoute) {
    Rng rng(46);
    for (int t = 0; t < 200; ++t) {
        const auto rho = random_mixed(2, 2, 4, rng);
        EXPECT_NEAR(concurrence_wootters(rho), concurrence_by_eigenvalues(rho.matrix()), 1e-9);
    }
}

TEST(Concurrence, LocalUnitaryInvariance) {
    Rng rng(44);
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_mixed(2, 2, 1 + rng.uniform_index(4), rng);
        const CMatrix u = kron(random_unitary(2, rng), random_unitary(2, rng));
        const DensityMatrix rotated(2, 2, CMatrix(u * rho.matrix() * u.adjoint()));
        EXPECT_NEAR(concurrence_wootters(rho), concurrence_wootters(rotated), 1e-9);
        const double c = concurrence_wootters(rho);
        EXPECT_GE(c, 0.0);
        EXPECT_LE(c, 1.0 + 1e-12);
    }
}

TEST(Concurrence, RejectsLargerSystems) {
    EXPECT_THROW(concurrence_wootters(random_mixed(3, 2, 2, 1)), UnsupportedDimension);
}

TEST(Entanglement, NormalizationAndFormula) {
    EXPECT_NEAR(entanglement_e(1.0, 2), 0.5, 1e-15);
    EXPECT_THROW(entanglement_e(-0.1, 2), ContractError);
    Rng rng(45);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int t = 0; t < 20; ++t) {
            const auto psi = random_pure(n, n, rng);
            const double e = entanglement_e(concurrence_pure(psi), n);
            EXPECT_NEAR(e * e, entanglement_pure_formula(psi), 1e-12);
            EXPECT_TRUE(in_range({Measure::E, e, n}));
        }
    }
}

TEST(Entanglement, MaximallyEntangledAndProduct) {
    for (std::size_t n = 2; n <= 5; ++n) {
        const CMatrix diag = CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) /
                             std::sqrt(static_cast<double>(n));
        const PureBipartite max_ent(diag);
        const double nd = static_cast<double>(n);
        EXPECT_NEAR(entanglement_pure_formula(max_ent), 2.0 * (nd - 1.0) * (nd - 1.0) / (nd * nd * nd), 1e-14);
        CMatrix prod = CMatrix::Zero(static_cast<Eigen::Index>(n), 2);
        prod.col(0).setConstant(1.0 / std::sqrt(nd));
        EXPECT_NEAR(entanglement_pure_formula(PureBipartite(prod)), 0.0, 1e-14);
    }
}

TEST(MeasureRange, Names) {
    EXPECT_EQ(measure_name(Measure::V2), "V2");
    EXPECT_FALSE(in_range({Measure::Purity, 0.1, 4}));
    EXPECT_TRUE(in_range({Measure::Purity, 0.25, 4}));
}

}  // namespace
}  // namespace duality
