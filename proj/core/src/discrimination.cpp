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

#include "duality/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace duality {

namespace {

Eigen::Index as_index(std::size_t v) { return static_cast<Eigen::Index>(v); }

// Priors below this are treated as absent by the optimizer.
constexpr double kZeroPrior = 1e-14;
// Relative eigenvalue cutoff for pseudo-inverse square roots.
constexpr double kPinvCutoff = 1e-12;

CMatrix inverse_sqrt_on_support(const CMatrix& m) {
    const HermitianMatrix h(CMatrix((m + m.adjoint()) * 0.5));
    const auto eig = eig_hermitian(h);
    const double top = eig.eigenvalues.size() > 0 ? std::max(eig.eigenvalues(0), 0.0) : 0.0;
    RVector inv(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < inv.size(); ++i) {
        const double v = eig.eigenvalues(i);
        inv(i) = v > kPinvCutoff * top && v > 0.0 ? 1.0 / std::sqrt(v) : 0.0;
    }
    return eig.eigenvectors * inv.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
}

std::size_t largest_prior(const std::vector<double>& q) {
    return static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
}

// Gives the missing part I - sum Pi_i to the largest-prior element.
void complete(Povm& povm, std::size_t target) {
    const auto r = povm.front().rows();
    CMatrix sum = CMatrix::Zero(r, r);
    for (const auto& el : povm) sum += el;
    povm[target] += CMatrix::Identity(r, r) - sum;
    povm[target] = (povm[target] + povm[target].adjoint()) * 0.5;
}

// Square-root measurement for weights w_i on the vectors v_i.
Povm square_root_measurement(const CMatrix& v, const std::vector<double>& w, std::size_t target) {
    const auto r = v.rows();
    CMatrix avg = CMatrix::Zero(r, r);
    for (std::size_t i = 0; i < w.size(); ++i) {
        avg += w[i] * v.col(as_index(i)) * v.col(as_index(i)).adjoint();
    }
    const CMatrix s = inverse_sqrt_on_support(avg);
    Povm povm(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const CVector sv = s * v.col(as_index(i));
        povm[i] = w[i] * sv * sv.adjoint();
    }
    complete(povm, target);
    return povm;
}

}  // namespace

Ensemble::Ensemble(std::vector<double> priors, DetectorConfig detectors, const Tolerances& tol)
    : priors_(std::move(priors)), detectors_(std::move(detectors)) {
    if (priors_.size() != detectors_.n()) {
        throw ContractError("Ensemble: " + std::to_string(priors_.size()) + " priors for " +
                            std::to_string(detectors_.n()) + " states");
    }
    double sum = 0.0;
    for (double& q : priors_) {
        if (!std::isfinite(q) || q < -1e-12) throw ContractError("Ensemble: negative prior");
        q = std::max(q, 0.0);
        sum += q;
    }
    if (std::abs(sum - 1.0) > tol.priors) {
        throw ContractError("Ensemble: priors sum to " + std::to_string(sum));
    }
}

Ensemble Ensemble::from_output(const InterferometerOutput& out, const DetectorConfig& det) {
    return Ensemble(out.q, det);
}

double success_probability(const Ensemble& e, const CMatrix& vectors, const Povm& povm) {
    double p = 0.0;
    for (std::size_t i = 0; i < e.n(); ++i) {
        const CVector v = vectors.col(as_index(i));
        p += e.priors()[i] * v.dot(povm[i] * v).real();
    }
    return p;
}

double povm_defect(const Povm& povm) {
    if (povm.empty()) return 0.0;
    const auto r = povm.front().rows();
    CMatrix sum = CMatrix::Zero(r, r);
    double worst = 0.0;
    for (const auto& el : povm) {
        sum += el;
        const RVector ev = eigvals_hermitian(HermitianMatrix(CMatrix((el + el.adjoint()) * 0.5)));
        if (ev.size() > 0) worst = std::max(worst, -ev(ev.size() - 1));
        worst = std::max(worst, (el - el.adjoint()).cwiseAbs().maxCoeff());
    }
    if (r > 0) worst = std::max(worst, (sum - CMatrix::Identity(r, r)).cwiseAbs().maxCoeff());
    return worst;
}

double ps_upper_bound(const Ensemble& e) {
    const auto& q = e.priors();
    const std::size_t n = e.n();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (i == k) continue;
            const double mean = 0.5 * (q[i] + q[k]);
            const double inner = mean * mean - q[i] * q[k] * e.detectors().overlap_sq(i, k);
            sum += 2.0 * std::sqrt(std::max(0.0, inner));
        }
    }
    const double nd = static_cast<double>(n);
    return 1.0 / nd + sum / (2.0 * nd);
}

double ps_helstrom_n2(const Ensemble& e) {
    if (e.n() != 2) throw ContractError("ps_helstrom_n2: requires exactly two states");
    const CMatrix v = e.detectors().vectors();
    const CVector d1 = v.col(0);
    const CVector d2 = v.col(1);
    const CMatrix t = e.priors()[0] * d1 * d1.adjoint() - e.priors()[1] * d2 * d2.adjoint();
    return 0.5 + 0.5 * trace_norm(HermitianMatrix(t));
}

double ps_pgm(const Ensemble& e) {
    const CMatrix v = e.detectors().vectors();
    const Povm povm = square_root_measurement(v, e.priors(), largest_prior(e.priors()));
    return success_probability(e, v, povm);
}

OptimizeResult ps_optimize(const Ensemble& e, const OptimizeOptions& options) {
    const CMatrix v = e.detectors().vectors();
    const auto r = v.rows();
    const std::vector<double>& q = e.priors();
    const std::size_t n = e.n();
    const std::size_t target = largest_prior(q);

    std::vector<bool> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = q[i] >= kZeroPrior;

    std::vector<double> seed_weights(n);
    for (std::size_t i = 0; i < n; ++i) seed_weights[i] = active[i] ? q[i] : 0.0;

    OptimizeResult result;
    result.povm = square_root_measurement(v, seed_weights, target);
    result.value = success_probability(e, v, result.povm);
    if (options.keep_history) result.history.push_back(result.value);

    std::vector<CMatrix> rho(n);
    for (std::size_t i = 0; i < n; ++i) rho[i] = v.col(as_index(i)) * v.col(as_index(i)).adjoint();

    for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
        result.iterations = iter + 1;
        CMatrix g = CMatrix::Zero(r, r);
        std::vector<CMatrix> numer(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) {
                numer[i] = CMatrix::Zero(r, r);
                continue;
            }
            numer[i] = q[i] * q[i] * rho[i] * result.povm[i] * rho[i];
            g += numer[i];
        }
        const CMatrix s = inverse_sqrt_on_support(g);
        Povm fixed_point(n);
        for (std::size_t i = 0; i < n; ++i) {
            fixed_point[i] = s * numer[i] * s;
            fixed_point[i] = (fixed_point[i] + fixed_point[i].adjoint()) * 0.5;
        }
        complete(fixed_point, target);

        // Full step first; halve toward the current POVM while the value drops.
        double step = 1.0;
        Povm candidate = fixed_point;
        double value = success_probability(e, v, candidate);
        while (value < result.value && step > 0x1.0p-30) {
            step *= 0.5;
            for (std::size_t i = 0; i < n; ++i) {
                candidate[i] = (1.0 - step) * result.povm[i] + step * fixed_point[i];
            }
            value = success_probability(e, v, candidate);
        }
        if (value < result.value) {
            // No ascent direction along the fixed-point step.
            result.converged = true;
            break;
        }
        const double delta = value - result.value;
        result.povm = std::move(candidate);
        result.value = value;
        if (options.keep_history) result.history.push_back(result.value);
        if (delta < options.tol && step == 1.0) {
            result.converged = true;
            break;
        }
    }

    // Near-identical states make the iteration crawl toward max q_i; the
    // guessing measurement reaches that value exactly.
    Povm guess(n, CMatrix::Zero(r, r));
    guess[target] = CMatrix::Identity(r, r);
    const double guess_value = success_probability(e, v, guess);
    if (guess_value > result.value) {
        result.povm = std::move(guess);
        result.value = guess_value;
        if (options.keep_history) result.history.push_back(result.value);
    }
    return result;
}

DiscriminationResult discriminate(const Ensemble& e, const OptimizeOptions& options) {
    const auto opt = ps_optimize(e, options);
    DiscriminationResult out{ps_upper_bound(e), std::nullopt, ps_pgm(e), opt.value, opt.iterations,
                             opt.converged};
    if (e.n() == 2) out.ps_exact = ps_helstrom_n2(e);
    return out;
}

}  // namespace duality
