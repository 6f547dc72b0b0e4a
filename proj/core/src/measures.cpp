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

#include "duality/measures.hpp"

#include <algorithm>
#include <cmath>

namespace duality {

namespace {

double norm_factor(std::size_t n) {
    const double nd = static_cast<double>(n);
    return 2.0 * (nd - 1.0) / (nd * nd);
}

}  // namespace

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::V: return "V";
        case Measure::V2: return "V2";
        case Measure::X: return "X";
        case Measure::X2: return "X2";
        case Measure::M: return "M";
        case Measure::E: return "E";
        case Measure::E2: return "E2";
        case Measure::Purity: return "purity";
    }
    return "?";
}

std::pair<double, double> measure_range(Measure m, std::size_t n) {
    const double nd = static_cast<double>(n);
    switch (m) {
        case Measure::V:
        case Measure::V2:
        case Measure::X:
        case Measure::X2:
        case Measure::E:
        case Measure::E2:
            return {0.0, 1.0};
        case Measure::M:
            return {0.0, 2.0 * (nd - 1.0) * (nd - 1.0) / (nd * nd * nd)};
        case Measure::Purity:
            return {1.0 / nd, 1.0};
    }
    return {0.0, 0.0};
}

bool in_range(const MeasureValue& v, double slack) {
    const auto [lo, hi] = measure_range(v.name, v.n);
    return v.value >= lo - slack && v.value <= hi + slack;
}

double coherence_l2_squared(const HermitianMatrix& rho) {
    const auto& m = rho.matrix();
    return m.cwiseAbs2().sum() - m.diagonal().cwiseAbs2().sum();
}

double coherence_l1(const HermitianMatrix& rho) {
    const auto& m = rho.matrix();
    double s = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            if (i != k) s += std::abs(m(i, k));
        }
    }
    return s;
}

double visibility_v2(const HermitianMatrix& rho) {
    return norm_factor(rho.dim()) * coherence_l2_squared(rho);
}

double visibility_v(const HermitianMatrix& rho) { return std::sqrt(visibility_v2(rho)); }

double visibility_x(const HermitianMatrix& rho) {
    return coherence_l1(rho) / static_cast<double>(rho.dim());
}

double purity(const HermitianMatrix& rho) { return rho.trace_square(); }

double mixedness_from_purity(double purity, std::size_t n) { return norm_factor(n) * (1.0 - purity); }

double mixedness(const HermitianMatrix& rho) { return mixedness_from_purity(purity(rho), rho.dim()); }

double concurrence_pure(const PureBipartite& psi) {
    const double pa = psi.reduced_a().trace_square();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - pa)));
}

double concurrence_wootters(const DensityMatrix& rho, const Tolerances& tol) {
    if (rho.dim_a() != 2 || rho.dim_b() != 2) {
        throw UnsupportedDimension("concurrence_wootters: mixed-state concurrence is only available "
                                   "for 2x2 systems");
    }
    // sigma_y (x) sigma_y
    CMatrix yy = CMatrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    // With rho = W W^dagger, the Wootters lambdas are the singular values of
    // W^T (sigma_y (x) sigma_y) W. This avoids square roots of eigenvalues that
    // are zero up to rounding, which cost half the digits for pure states.
    const auto eig = eig_hermitian(rho.hermitian());
    CMatrix w = eig.eigenvectors;
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
        double v = eig.eigenvalues(j);
        if (v < 0.0 && v > -tol.wootters_clip) v = 0.0;
        w.col(j) *= std::sqrt(std::max(0.0, v));
    }
    const CMatrix tau = w.transpose() * yy * w;
    const RVector sv = Eigen::JacobiSVD<CMatrix>(tau).singularValues();
    double lam[4] = {0.0, 0.0, 0.0, 0.0};
    for (Eigen::Index i = 0; i < sv.size() && i < 4; ++i) lam[i] = sv(i);
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double entanglement_e(double concurrence, std::size_t n) {
    if (concurrence < 0.0) throw ContractError("entanglement_e: concurrence must be >= 0");
    const double nd = static_cast<double>(n);
    return std::sqrt(nd - 1.0) / nd * concurrence;
}

double entanglement_pure_formula(const PureBipartite& psi) {
    const auto& p = psi.path_weights();
    const CMatrix overlaps = psi.branch_overlaps();
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            s += p[i] * p[j] *
                 std::norm(overlaps(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        }
    }
    return norm_factor(psi.dim_a()) * (1.0 - s);
}

}  // namespace duality
