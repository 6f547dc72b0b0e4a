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

// Dense complex matrix algebra at desk scale (dimensions up to ~64).

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "duality/config.hpp"

namespace duality {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// A square complex matrix equal to its conjugate transpose.
///
/// Construction symmetrizes (M + M^dagger)/2 when the input is Hermitian within
/// `Tolerances::hermitian` and throws ContractError otherwise, so downstream
/// eigensolvers always see an exactly symmetric matrix.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const CMatrix& m, const Tolerances& tol = kDefaultTolerances);

    static HermitianMatrix zero(std::size_t dim);
    static HermitianMatrix identity(std::size_t dim);
    static HermitianMatrix diagonal(const std::vector<double>& diag);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const { return m_; }
    Complex operator()(std::size_t i, std::size_t k) const {
        return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
    }

    double trace() const;
    /// Tr M^2 (real for Hermitian M).
    double trace_square() const;

private:
    CMatrix m_;
};

struct EigenDecomposition {
    /// Sorted descending.
    RVector eigenvalues;
    /// Column j is the eigenvector for eigenvalues[j].
    CMatrix eigenvectors;
};

EigenDecomposition eig_hermitian(const HermitianMatrix& m);

/// Eigenvalues only, sorted descending.
RVector eigvals_hermitian(const HermitianMatrix& m);

/// Sum of |eigenvalues|.
double trace_norm(const HermitianMatrix& m);

enum class Keep { A, B };

struct BipartiteDims {
    std::size_t a;
    std::size_t b;
};

/// Partial trace over one factor of C^a (x) C^b, basis index i*b + j.
HermitianMatrix partial_trace(const HermitianMatrix& rho, BipartiteDims dims, Keep keep);

/// Kronecker product, left factor outermost.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Matrix function f applied to the spectrum of a Hermitian matrix.
template <typename F>
CMatrix apply_spectral(const HermitianMatrix& m, F&& f) {
    const auto eig = eig_hermitian(m);
    RVector mapped(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < mapped.size(); ++i) {
        mapped(i) = f(eig.eigenvalues(i));
    }
    return eig.eigenvectors * mapped.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
}

/// Factor a Gram matrix G with G(i,k) = <v_k|v_i> into explicit unit vectors.
///
/// Returns an r x n matrix whose column i is v_i, where r is the numerical
/// rank of G. Rank-deficient Grams (identical vectors) are accepted.
/// Throws ContractError when G is not Hermitian, has an eigenvalue below
/// -gram_psd, or a diagonal entry further than gram_diagonal from 1.
CMatrix gram_to_vectors(const CMatrix& gram, const Tolerances& tol = kDefaultTolerances);

/// Gram matrix G(i,k) = <v_k|v_i> of the columns of `vectors`.
CMatrix gram_of(const CMatrix& vectors);

/// Largest entrywise |a - b|.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

bool all_finite(const CMatrix& m);

}  // namespace duality
