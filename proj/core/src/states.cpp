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

#include "duality/states.hpp"

#include <cmath>
#include <string>

#include "json_util.hpp"

namespace duality {

namespace {

Eigen::Index as_index(std::size_t v) { return static_cast<Eigen::Index>(v); }

void check_range(double v, double lo, double hi, const char* what) {
    if (!(v >= lo && v <= hi)) {
        throw ContractError(std::string(what) + " = " + std::to_string(v) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t dim_a, std::size_t dim_b, HermitianMatrix matrix,
                             const Tolerances& tol)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
    if (dim_a_ == 0 || dim_b_ == 0 || matrix_.dim() != dim_a_ * dim_b_) {
        throw ContractError("DensityMatrix: dimension " + std::to_string(matrix_.dim()) +
                            " does not match " + std::to_string(dim_a_) + "x" +
                            std::to_string(dim_b_));
    }
    const double tr = matrix_.trace();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw ContractError("DensityMatrix: trace " + std::to_string(tr) + " is not 1");
    }
    const RVector ev = eigvals_hermitian(matrix_);
    if (ev(ev.size() - 1) < -tol.psd) {
        throw ContractError("DensityMatrix: not positive semidefinite (min eigenvalue " +
                            std::to_string(ev(ev.size() - 1)) + ")");
    }
}

DensityMatrix::DensityMatrix(std::size_t dim_a, std::size_t dim_b, const CMatrix& matrix,
                             const Tolerances& tol)
    : DensityMatrix(dim_a, dim_b, HermitianMatrix(matrix, tol), tol) {}

HermitianMatrix DensityMatrix::reduced_a() const {
    return partial_trace(matrix_, {dim_a_, dim_b_}, Keep::A);
}

HermitianMatrix DensityMatrix::reduced_b() const {
    return partial_trace(matrix_, {dim_a_, dim_b_}, Keep::B);
}

PureBipartite::PureBipartite(CMatrix amplitudes, const Tolerances& tol) : amps_(std::move(amplitudes)) {
    if (amps_.rows() < 1 || amps_.cols() < 1) throw ContractError("PureBipartite: empty amplitudes");
    if (!all_finite(amps_)) throw ContractError("PureBipartite: non-finite amplitude");
    const double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol.pure_norm) {
        throw ContractError("PureBipartite: squared norm " + std::to_string(norm2) + " is not 1");
    }
    weights_.resize(static_cast<std::size_t>(amps_.rows()));
    for (Eigen::Index i = 0; i < amps_.rows(); ++i) {
        weights_[static_cast<std::size_t>(i)] = amps_.row(i).squaredNorm();
    }
}

CVector PureBipartite::branch(std::size_t i) const {
    const double p = weights_.at(i);
    if (p <= 0.0) {
        CVector e = CVector::Zero(amps_.cols());
        e(0) = 1.0;
        return e;
    }
    return amps_.row(as_index(i)).transpose() / std::sqrt(p);
}

CMatrix PureBipartite::branch_overlaps() const {
    const auto n = amps_.rows();
    CMatrix u(amps_.cols(), n);
    for (Eigen::Index i = 0; i < n; ++i) u.col(i) = branch(static_cast<std::size_t>(i));
    return gram_of(u);
}

CVector PureBipartite::vector() const {
    CVector v(amps_.size());
    const auto m = amps_.cols();
    for (Eigen::Index i = 0; i < amps_.rows(); ++i) {
        for (Eigen::Index j = 0; j < m; ++j) v(i * m + j) = amps_(i, j);
    }
    return v;
}

DensityMatrix PureBipartite::density() const {
    const CVector v = vector();
    return DensityMatrix(dim_a(), dim_b(), CMatrix(v * v.adjoint()));
}

HermitianMatrix PureBipartite::reduced_a() const {
    // (rho_A)_ik = sum_j a_ij conj(a_kj)
    return HermitianMatrix(CMatrix(amps_ * amps_.adjoint()));
}

PureBipartite random_pure(std::size_t n, std::size_t m, Rng& rng) {
    if (n < 2) throw ContractError("random_pure: need at least 2 paths");
    if (m < 1) throw ContractError("random_pure: memory dimension must be >= 1");
    CMatrix a(as_index(n), as_index(m));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rng.complex_normal();
    }
    a /= a.norm();
    return PureBipartite(std::move(a));
}

PureBipartite random_pure(std::size_t n, std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure(n, m, rng);
}

DensityMatrix random_mixed(std::size_t n, std::size_t m, std::size_t rank, Rng& rng) {
    if (n < 1 || m < 1) throw ContractError("random_mixed: dimensions must be positive");
    const std::size_t dim = n * m;
    if (rank < 1 || rank > dim) {
        throw ContractError("random_mixed: rank " + std::to_string(rank) + " outside [1, " +
                            std::to_string(dim) + "]");
    }
    CMatrix g(as_index(dim), as_index(rank));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_normal();
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(n, m, rho);
}

DensityMatrix random_mixed(std::size_t n, std::size_t m, std::size_t rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_mixed(n, m, rank, rng);
}

CMatrix random_unitary(std::size_t dim, Rng& rng) {
    CMatrix z(as_index(dim), as_index(dim));
    for (Eigen::Index i = 0; i < z.rows(); ++i) {
        for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) = rng.complex_normal();
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

DensityMatrix werner(double p) {
    check_range(p, 0.0, 1.0, "werner: p");
    CVector psi = CVector::Zero(4);
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    const CMatrix rho = p * psi * psi.adjoint() + ((1.0 - p) / 4.0) * CMatrix::Identity(4, 4);
    return DensityMatrix(2, 2, rho);
}

PureBipartite example1_state(double p, double c_u, double phase) {
    check_range(p, 0.0, 1.0, "example1_state: p");
    check_range(c_u, 0.0, 1.0, "example1_state: c_u");
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = std::sqrt(p);
    const double r = std::sqrt(1.0 - p);
    a(1, 0) = r * std::polar(std::sqrt(c_u), phase);
    a(1, 1) = r * std::sqrt(1.0 - c_u);
    return PureBipartite(std::move(a));
}

PureBipartite threepath_example_state(double p, double q) {
    check_range(p, 0.0, 1.0, "threepath_example_state: p");
    check_range(q, 0.0, 1.0, "threepath_example_state: q");
    CMatrix a = CMatrix::Zero(3, 3);
    a(0, 0) = std::sqrt(p / 3.0);
    a(1, 0) = std::sqrt(q / 3.0);
    a(2, 2) = std::sqrt((3.0 - p - q) / 3.0);
    return PureBipartite(std::move(a));
}

std::string density_to_json(const DensityMatrix& rho) {
    nlohmann::json j;
    j["dim_a"] = rho.dim_a();
    j["dim_b"] = rho.dim_b();
    j["re"] = detail::real_part_json(rho.matrix(), false);
    j["im"] = detail::real_part_json(rho.matrix(), true);
    return j.dump();
}

DensityMatrix density_from_json(const std::string& text, const Tolerances& tol) {
    const auto j = detail::parse_object(text, "density_from_json");
    const std::size_t dim_a = detail::positive_count(j, "dim_a", "density_from_json");
    const std::size_t dim_b = detail::positive_count(j, "dim_b", "density_from_json");
    if (!j.contains("re") || !j.contains("im")) {
        throw ContractError("density_from_json: missing 're' or 'im'");
    }
    const CMatrix m = detail::matrix_from_json(j["re"], j["im"], dim_a * dim_b, "density_from_json");
    return DensityMatrix(dim_a, dim_b, m, tol);
}

}  // namespace duality
