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

#include "duality/interferometer.hpp"

#include <cmath>
#include <string>

#include "json_util.hpp"

namespace duality {

namespace {

Eigen::Index as_index(std::size_t v) { return static_cast<Eigen::Index>(v); }

CMatrix validated_gram(const CMatrix& gram, const Tolerances& tol) {
    // gram_to_vectors performs every check the detector configuration needs.
    (void)gram_to_vectors(gram, tol);
    CMatrix g = HermitianMatrix(gram, tol).matrix();
    g.diagonal().setOnes();
    return g;
}

}  // namespace

DetectorConfig::DetectorConfig(const CMatrix& gram, const Tolerances& tol)
    : gram_(validated_gram(gram, tol)) {
    if (gram_.rows() < 1) throw ContractError("DetectorConfig: need at least one detector state");
}

DetectorConfig DetectorConfig::from_vectors(const CMatrix& vectors) {
    CMatrix v = vectors;
    for (Eigen::Index i = 0; i < v.cols(); ++i) {
        const double norm = v.col(i).norm();
        if (!(norm > 0.0)) throw ContractError("DetectorConfig::from_vectors: zero vector");
        v.col(i) /= norm;
    }
    CMatrix g = gram_of(v);
    return DetectorConfig(g);
}

DetectorConfig DetectorConfig::uniform_overlap(std::size_t n, double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw ContractError("uniform_overlap: squared overlap must lie in [0, 1]");
    }
    const double s = std::sqrt(c);
    CMatrix g = CMatrix::Constant(as_index(n), as_index(n), s);
    for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, i) = 1.0;
    return DetectorConfig(g);
}

DetectorConfig DetectorConfig::orthogonal(std::size_t n) {
    return DetectorConfig(CMatrix::Identity(as_index(n), as_index(n)));
}

DetectorConfig DetectorConfig::two_path(Complex overlap) {
    if (std::abs(overlap) > 1.0 + 1e-15) throw ContractError("two_path: |overlap| exceeds 1");
    CMatrix g = CMatrix::Identity(2, 2);
    g(0, 1) = overlap;
    g(1, 0) = std::conj(overlap);
    return DetectorConfig(g);
}

DetectorConfig DetectorConfig::random(std::size_t n, std::size_t dim, Rng& rng) {
    if (n < 1 || dim < 1) throw ContractError("DetectorConfig::random: dimensions must be positive");
    CMatrix v(as_index(dim), as_index(n));
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        for (Eigen::Index k = 0; k < v.cols(); ++k) v(i, k) = rng.complex_normal();
    }
    return from_vectors(v);
}

double DetectorConfig::overlap_sq(std::size_t i, std::size_t k) const {
    return std::norm(gram_(as_index(i), as_index(k)));
}

std::string detectors_to_json(const DetectorConfig& det) {
    nlohmann::json j;
    j["n"] = det.n();
    j["gram_re"] = detail::real_part_json(det.gram(), false);
    j["gram_im"] = detail::real_part_json(det.gram(), true);
    return j.dump();
}

DetectorConfig detectors_from_json(const std::string& text, const Tolerances& tol) {
    const auto j = detail::parse_object(text, "detectors_from_json");
    const std::size_t n = detail::positive_count(j, "n", "detectors_from_json");
    if (!j.contains("gram_re") || !j.contains("gram_im")) {
        throw ContractError("detectors_from_json: missing 'gram_re' or 'gram_im'");
    }
    return DetectorConfig(detail::matrix_from_json(j["gram_re"], j["gram_im"], n, "detectors_from_json"),
                          tol);
}

InterferometerOutput apply_detectors(const DensityMatrix& rho, const DetectorConfig& det) {
    const std::size_t n = rho.dim_a();
    const std::size_t m = rho.dim_b();
    if (det.n() != n) {
        throw ContractError("apply_detectors: state has " + std::to_string(n) + " paths but " +
                            std::to_string(det.n()) + " detector states were given");
    }
    const CMatrix& g = det.gram();
    const auto nb = as_index(m);
    CMatrix ab = rho.matrix();
    for (Eigen::Index i = 0; i < as_index(n); ++i) {
        for (Eigen::Index k = 0; k < as_index(n); ++k) {
            if (i == k) continue;
            ab.block(i * nb, k * nb, nb, nb) *= g(i, k);
        }
    }
    HermitianMatrix rho_a = rho.reduced_a();
    HermitianMatrix rho_a_tilde(CMatrix(g.cwiseProduct(rho_a.matrix())));

    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = rho_a(i, i).real();
    double purity_d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) purity_d += q[i] * q[k] * det.overlap_sq(i, k);
    }

    DensityMatrix rho_ab_tilde(n, m, ab);
    const double purity_a = rho_a_tilde.trace_square();
    const double purity_ab = rho_ab_tilde.purity();
    return InterferometerOutput{std::move(rho_ab_tilde), std::move(rho_a_tilde), std::move(rho_a),
                                std::move(q), purity_d, purity_a, purity_ab};
}

DensityMatrix build_tripartite(const DensityMatrix& rho, const DetectorConfig& det) {
    const std::size_t n = rho.dim_a();
    const std::size_t m = rho.dim_b();
    if (det.n() != n) throw ContractError("build_tripartite: path count mismatch");
    const CMatrix d = det.vectors();
    const auto r = d.rows();
    const auto nb = as_index(m);
    CMatrix out = CMatrix::Zero(as_index(n) * nb * r, as_index(n) * nb * r);
    // Block (i,k) on A is B_ik (x) |d_i><d_k|.
    for (Eigen::Index i = 0; i < as_index(n); ++i) {
        for (Eigen::Index k = 0; k < as_index(n); ++k) {
            const CMatrix b_ik = rho.matrix().block(i * nb, k * nb, nb, nb);
            const CMatrix dd = d.col(i) * d.col(k).adjoint();
            out.block(i * nb * r, k * nb * r, nb * r, nb * r) = kron(b_ik, dd);
        }
    }
    return DensityMatrix(n, m * static_cast<std::size_t>(r), out);
}

}  // namespace duality
