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

#include "duality/qmat.hpp"

#include <cmath>
#include <string>

namespace duality {

namespace {

Eigen::Index as_index(std::size_t v) { return static_cast<Eigen::Index>(v); }

}  // namespace

bool all_finite(const CMatrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Complex z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ContractError("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

HermitianMatrix::HermitianMatrix(const CMatrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols()) {
        throw ContractError("HermitianMatrix: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected square");
    }
    if (!all_finite(m)) throw ContractError("HermitianMatrix: non-finite entry");
    const CMatrix adj = m.adjoint();
    const double asym = max_abs_diff(m, adj);
    if (asym > tol.hermitian) {
        throw ContractError("HermitianMatrix: |M - M^dagger| = " + std::to_string(asym) +
                            " exceeds tolerance");
    }
    m_ = (m + adj) * 0.5;
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
    return HermitianMatrix(CMatrix::Zero(as_index(dim), as_index(dim)));
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
    return HermitianMatrix(CMatrix::Identity(as_index(dim), as_index(dim)));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& diag) {
    CMatrix m = CMatrix::Zero(as_index(diag.size()), as_index(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i) m(as_index(i), as_index(i)) = diag[i];
    return HermitianMatrix(m);
}

double HermitianMatrix::trace() const { return m_.trace().real(); }

double HermitianMatrix::trace_square() const {
    // Tr M^2 = sum |M_ik|^2 for Hermitian M.
    return m_.cwiseAbs2().sum();
}

EigenDecomposition eig_hermitian(const HermitianMatrix& m) {
    EigenDecomposition out;
    if (m.dim() == 0) return out;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix(), Eigen::ComputeEigenvectors);
    // Eigen returns ascending order.
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

RVector eigvals_hermitian(const HermitianMatrix& m) {
    if (m.dim() == 0) return RVector();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().reverse();
}

double trace_norm(const HermitianMatrix& m) { return eigvals_hermitian(m).cwiseAbs().sum(); }

HermitianMatrix partial_trace(const HermitianMatrix& rho, BipartiteDims dims, Keep keep) {
    if (dims.a == 0 || dims.b == 0 || rho.dim() != dims.a * dims.b) {
        throw ContractError("partial_trace: matrix dimension " + std::to_string(rho.dim()) +
                            " does not factor as " + std::to_string(dims.a) + "x" +
                            std::to_string(dims.b));
    }
    const auto& m = rho.matrix();
    const auto na = as_index(dims.a);
    const auto nb = as_index(dims.b);
    if (keep == Keep::A) {
        CMatrix out = CMatrix::Zero(na, na);
        for (Eigen::Index i = 0; i < na; ++i) {
            for (Eigen::Index k = 0; k < na; ++k) {
                out(i, k) = m.block(i * nb, k * nb, nb, nb).trace();
            }
        }
        return HermitianMatrix(out);
    }
    CMatrix out = CMatrix::Zero(nb, nb);
    for (Eigen::Index i = 0; i < na; ++i) out += m.block(i * nb, i * nb, nb, nb);
    return HermitianMatrix(out);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
        }
    }
    return out;
}

CMatrix gram_of(const CMatrix& vectors) {
    // (V^dagger V)(k,i) = <v_k|v_i>, so G = (V^dagger V)^T.
    return (vectors.adjoint() * vectors).transpose();
}

CMatrix gram_to_vectors(const CMatrix& gram, const Tolerances& tol) {
    const HermitianMatrix g(gram, tol);
    const auto n = as_index(g.dim());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(g.matrix()(i, i) - 1.0) > tol.gram_diagonal) {
            throw ContractError("gram_to_vectors: diagonal entry " + std::to_string(i) +
                                " is not 1");
        }
    }
    // conj(G) = V^dagger V; factor conj(G) = U diag(lambda) U^dagger.
    const auto eig = eig_hermitian(HermitianMatrix(CMatrix(g.matrix().conjugate())));
    if (n > 0 && eig.eigenvalues(n - 1) < -tol.gram_psd) {
        throw ContractError("gram_to_vectors: Gram matrix is not positive semidefinite (min "
                            "eigenvalue " + std::to_string(eig.eigenvalues(n - 1)) + ")");
    }
    Eigen::Index rank = 0;
    while (rank < n && eig.eigenvalues(rank) > tol.gram_psd) ++rank;
    CMatrix vectors(rank, n);
    for (Eigen::Index r = 0; r < rank; ++r) {
        vectors.row(r) = std::sqrt(eig.eigenvalues(r)) * eig.eigenvectors.col(r).adjoint();
    }
    for (Eigen::Index i = 0; i < n; ++i) vectors.col(i).normalize();
    return vectors;
}

}  // namespace duality
