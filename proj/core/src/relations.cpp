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

#include "duality/relations.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "duality/measures.hpp"

namespace duality {

namespace {

enum class PsSource { FromOptions, Helstrom };

double nd(std::size_t n) { return static_cast<double>(n); }

/// 2(n-1)/n^2
double weight(std::size_t n) { return 2.0 * (nd(n) - 1.0) / (nd(n) * nd(n)); }

/// (1 - 1/n)^2
double duality_bound(std::size_t n) {
    const double b = 1.0 - 1.0 / nd(n);
    return b * b;
}

struct Terms {
    std::size_t n;
    InterferometerOutput out;
    double ps;
    double pd2;
    double v2;
};

Terms compute_terms(const DensityMatrix& rho, const DetectorConfig& det, const EvalOptions& opt,
                    PsSource source) {
    auto out = apply_detectors(rho, det);
    const Ensemble ens = Ensemble::from_output(out, det);
    const std::size_t n = rho.dim_a();
    double ps = 0.0;
    if (source == PsSource::Helstrom) {
        ps = ps_helstrom_n2(ens);
    } else if (opt.pd == PdMode::Oracle) {
        ps = ps_optimize(ens, opt.optimizer).value;
    } else {
        ps = ps_upper_bound(ens);
    }
    const double pd = ps - 1.0 / nd(n);
    const double v2 = visibility_v2(out.rho_a_tilde);
    return Terms{n, std::move(out), ps, pd * pd, v2};
}

ComplementarityReport start_report(RelationId id, const Terms& t) {
    ComplementarityReport r{};
    r.relation = id;
    r.n = t.n;
    r.components.set(Component::Ps, t.ps);
    r.components.set(Component::Pd2, t.pd2);
    r.components.set(Component::V2, t.v2);
    r.components.set(Component::PurityA, t.out.purity_a);
    r.components.set(Component::PurityD, t.out.purity_d);
    r.components.set(Component::PurityAB, t.out.purity_ab);
    return r;
}

ComplementarityReport finish(ComplementarityReport r, double lhs, double rhs, bool identity,
                             const Tolerances& tol) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = rhs - lhs;
    r.is_identity = identity;
    r.satisfied = identity ? std::abs(r.residual) <= tol.relation : r.residual >= -tol.relation;
    return r;
}

void require_two_paths(const DensityMatrix& rho, const char* what) {
    if (rho.dim_a() != 2) {
        throw ContractError(std::string(what) + ": requires a two-path interferometer, got n = " +
                            std::to_string(rho.dim_a()));
    }
}

double entanglement_sq_of(const DensityMatrix& rho, const Tolerances& tol) {
    const std::size_t n = rho.dim_a();
    double c = 0.0;
    if (rho.dim_a() == 2 && rho.dim_b() == 2) {
        c = concurrence_wootters(rho, tol);
    } else if (rho.purity() >= 1.0 - tol.psd) {
        const double pa = rho.reduced_a().trace_square();
        c = std::sqrt(std::max(0.0, 2.0 * (1.0 - pa)));
    } else {
        throw UnsupportedDimension("entanglement unavailable: mixed-state concurrence is only "
                                   "implemented for 2x2 inputs");
    }
    const double e = entanglement_e(c, n);
    return e * e;
}

ComplementarityReport th3_from(const Terms& t, double e2, const Tolerances& tol) {
    auto r = start_report(RelationId::Th3Entanglement, t);
    r.components.set(Component::E2, e2);
    const double n2 = nd(t.n) * nd(t.n);
    const double lhs = t.pd2 + t.v2 + e2;
    const double rhs = (n2 - 1.0) / n2 - weight(t.n) * t.out.purity_ab;
    return finish(std::move(r), lhs, rhs, false, tol);
}

}  // namespace

std::string_view relation_key(RelationId id) {
    switch (id) {
        case RelationId::Th1Duality: return "th1";
        case RelationId::Eq13NoMemory: return "eq13";
        case RelationId::Cor1N2Identity: return "cor1";
        case RelationId::Th2Mixedness: return "th2";
        case RelationId::Cor2N2Identity: return "cor2";
        case RelationId::Th3Entanglement: return "th3";
        case RelationId::Eq1Prior: return "eq1";
        case RelationId::Eq2PriorMemory: return "eq2";
        case RelationId::LimitPdV: return "limit_pd_v";
        case RelationId::LimitPdE: return "limit_pd_e";
    }
    return "?";
}

std::optional<RelationId> parse_relation(std::string_view key) {
    for (RelationId id : kAllRelations) {
        if (relation_key(id) == key) return id;
    }
    return std::nullopt;
}

std::string_view component_key(Component c) {
    switch (c) {
        case Component::Pd2: return "pd2";
        case Component::V2: return "v2";
        case Component::X2: return "x2";
        case Component::MA: return "m_a";
        case Component::MD: return "m_d";
        case Component::E2: return "e2";
        case Component::PurityA: return "purity_a";
        case Component::PurityD: return "purity_d";
        case Component::PurityAB: return "purity_ab";
        case Component::Ps: return "ps";
    }
    return "?";
}

double Components::at(Component c) const {
    const auto v = get(c);
    if (!v) throw std::out_of_range("component '" + std::string(component_key(c)) + "' not computed");
    return *v;
}

ComplementarityReport eval_th1(const DensityMatrix& rho, const DetectorConfig& det, const EvalOptions& opt) {
    const Terms t = compute_terms(rho, det, opt, PsSource::FromOptions);
    const double rhs = duality_bound(t.n) - weight(t.n) * (t.out.purity_d - t.out.purity_a);
    return finish(start_report(RelationId::Th1Duality, t), t.pd2 + t.v2, rhs, false, opt.tol);
}

ComplementarityReport eval_eq13(const DensityMatrix& rho, const DetectorConfig& det, const EvalOptions& opt) {
    if (rho.dim_b() != 1) {
        throw ContractError("eval_eq13: the no-memory relation requires memory dimension 1, got " +
                            std::to_string(rho.dim_b()));
    }
    const Terms t = compute_terms(rho, det, opt, PsSource::FromOptions);
    return finish(start_report(RelationId::Eq13NoMemory, t), t.pd2 + t.v2, duality_bound(t.n), false,
                  opt.tol);
}

ComplementarityReport eval_cor1(const DensityMatrix& rho, const DetectorConfig& det, const EvalOptions& opt) {
    require_two_paths(rho, "eval_cor1");
    const Terms t = compute_terms(rho, det, opt, PsSource::Helstrom);
    const double rhs = 0.25 - 0.5 * (t.out.purity_d - t.out.purity_a);
    return finish(start_report(RelationId::Cor1N2Identity, t), t.pd2 + t.v2, rhs, true, opt.tol);
}

ComplementarityReport eval_th2(const DensityMatrix& rho, const DetectorConfig& det, const EvalOptions& opt) {
    const Terms t = compute_terms(rho, det, opt, PsSource::FromOptions);
    const double m_a = mixedness_from_purity(t.out.purity_a, t.n);
    const double m_d = mixedness_from_purity(t.out.purity_d, t.n);
    auto r = start_report(RelationId::Th2Mixedness, t);
    r.components.set(Component::MA, m_a);
    r.components.set(Component::MD, m_d);
    return finish(std::move(r), t.pd2 + t.v2 + m_a, duality_bound(t.n) + m_d, false, opt.tol);
}

ComplementarityReport eval_cor2(const DensityMatrix& rho, const DetectorConfig& det, const EvalOptions& opt) {
    require_two_paths(rho, "eval_cor2");
    if (det.n() == 2 && std::abs(det.overlap_sq(0, 1) - 0.5) > 1e-12) {
        throw ContractError("eval_cor2: requires |<d1|d2>|^2 = 1/2, got " +
                            std::to_string(det.overlap_sq(0, 1)));
    }
    const Terms t = compute_terms(rho, det, opt, PsSource::Helstrom);
    const double m_a = mixedness_from_purity(t.out.purity_a, t.n);
    auto r = start_report(RelationId::Cor2N2Identity, t);
    r.components.set(Component::MA, m_a);
    return finish(std::move(r), t.pd2 + 0.5 * t.v2 + 0.5 * m_a, 0.25, true, opt.tol);
}

ComplementarityReport eval_th3(const DensityMatrix& rho, const DetectorConfig& det, const EvalOptions& opt) {
    const double e2 = entanglement_sq_of(rho, opt.tol);
    const Terms t = compute_terms(rho, det, opt, PsSource::FromOptions);
    return th3_from(t, e2, opt.tol);
}

ComplementarityReport eval_th3(const PureBipartite& psi, const DetectorConfig& det, const EvalOptions& opt) {
    const double e = entanglement_e(concurrence_pure(psi), psi.dim_a());
    const Terms t = compute_terms(psi.density(), det, opt, PsSource::FromOptions);
    return th3_from(t, e * e, opt.tol);
}

ComplementarityReport eval_limits(const PureBipartite& psi, const DetectorConfig& det, RelationId which,
                                  const EvalOptions& opt) {
    if (which != RelationId::LimitPdV && which != RelationId::LimitPdE) {
        throw ContractError("eval_limits: relation must be limit_pd_v or limit_pd_e");
    }
    const bool v_branch = which == RelationId::LimitPdV;
    const auto& p = psi.path_weights();
    const CMatrix overlaps = psi.branch_overlaps();
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (i == j || p[i] <= 0.0 || p[j] <= 0.0) continue;
            const double c = std::norm(overlaps(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
            const double target = v_branch ? 1.0 : 0.0;
            if (std::abs(c - target) > 1e-9) {
                throw ContractError(std::string("eval_limits: branch overlaps |<u_j|u_i>|^2 must all be ") +
                                    (v_branch ? "1" : "0") + ", found " + std::to_string(c));
            }
        }
    }
    const Terms t = compute_terms(psi.density(), det, opt, PsSource::FromOptions);
    auto r = start_report(which, t);
    const bool identity = t.n == 2;
    if (v_branch) {
        return finish(std::move(r), t.pd2 + t.v2, duality_bound(t.n), identity, opt.tol);
    }
    const double e = entanglement_e(concurrence_pure(psi), t.n);
    r.components.set(Component::E2, e * e);
    const double n2 = nd(t.n) * nd(t.n);
    const double rhs = (n2 - 1.0) / n2 - weight(t.n) * t.out.purity_ab;
    return finish(std::move(r), t.pd2 + e * e, rhs, identity, opt.tol);
}

std::pair<ComplementarityReport, ComplementarityReport> eval_priors(const DensityMatrix& rho,
                                                                    const DetectorConfig& det,
                                                                    const EvalOptions& opt) {
    const Terms t = compute_terms(rho, det, opt, PsSource::FromOptions);
    const double x = visibility_x(t.out.rho_a_tilde);
    const double x2 = x * x;
    auto eq1 = start_report(RelationId::Eq1Prior, t);
    eq1.components.set(Component::X2, x2);
    auto eq2 = start_report(RelationId::Eq2PriorMemory, t);
    eq2.components.set(Component::X2, x2);
    const double rhs2 = duality_bound(t.n) + weight(t.n) * (t.out.purity_a - t.out.purity_ab);
    return {finish(std::move(eq1), t.pd2 + x2, duality_bound(t.n), false, opt.tol),
            finish(std::move(eq2), t.pd2 + x2, rhs2, false, opt.tol)};
}

ComplementarityReport evaluate(RelationId id, const DensityMatrix& rho, const DetectorConfig& det,
                               const EvalOptions& opt) {
    switch (id) {
        case RelationId::Th1Duality: return eval_th1(rho, det, opt);
        case RelationId::Eq13NoMemory: return eval_eq13(rho, det, opt);
        case RelationId::Cor1N2Identity: return eval_cor1(rho, det, opt);
        case RelationId::Th2Mixedness: return eval_th2(rho, det, opt);
        case RelationId::Cor2N2Identity: return eval_cor2(rho, det, opt);
        case RelationId::Th3Entanglement: return eval_th3(rho, det, opt);
        case RelationId::Eq1Prior: return eval_priors(rho, det, opt).first;
        case RelationId::Eq2PriorMemory: return eval_priors(rho, det, opt).second;
        case RelationId::LimitPdV:
        case RelationId::LimitPdE:
            throw ContractError("evaluate: limit relations need a pure input state");
    }
    throw ContractError("evaluate: unknown relation");
}

ComplementarityReport evaluate(RelationId id, const PureBipartite& psi, const DetectorConfig& det,
                               const EvalOptions& opt) {
    switch (id) {
        case RelationId::Th3Entanglement: return eval_th3(psi, det, opt);
        case RelationId::LimitPdV:
        case RelationId::LimitPdE: return eval_limits(psi, det, id, opt);
        default: return evaluate(id, psi.density(), det, opt);
    }
}

bool components_in_range(const ComplementarityReport& r, double slack) {
    const std::size_t n = r.n;
    const auto within = [&](std::optional<double> v, double lo, double hi) {
        return !v || (*v >= lo - slack && *v <= hi + slack);
    };
    const auto& c = r.components;
    const auto [m_lo, m_hi] = measure_range(Measure::M, n);
    return within(c.get(Component::Pd2), 0.0, duality_bound(n)) &&
           within(c.get(Component::V2), 0.0, 1.0) && within(c.get(Component::X2), 0.0, 1.0) &&
           within(c.get(Component::MA), m_lo, m_hi) && within(c.get(Component::MD), m_lo, m_hi) &&
           within(c.get(Component::E2), 0.0, m_hi) &&
           within(c.get(Component::PurityA), 1.0 / nd(n), 1.0) &&
           within(c.get(Component::PurityD), 1.0 / nd(n), 1.0) &&
           within(c.get(Component::PurityAB), 0.0, 1.0) && within(c.get(Component::Ps), 1.0 / nd(n), 1.0);
}

std::string report_to_json(const ComplementarityReport& r) {
    nlohmann::ordered_json j;
    j["relation"] = std::string(relation_key(r.relation));
    j["n"] = r.n;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["residual"] = r.residual;
    j["satisfied"] = r.satisfied;
    j["is_identity"] = r.is_identity;
    nlohmann::ordered_json comps = nlohmann::ordered_json::object();
    for (Component c : kAllComponents) {
        if (const auto v = r.components.get(c)) comps[std::string(component_key(c))] = *v;
    }
    j["components"] = std::move(comps);
    return j.dump();
}

std::vector<std::string> report_columns() {
    std::vector<std::string> cols = {"relation", "n", "lhs", "rhs", "residual", "satisfied", "is_identity"};
    for (Component c : kAllComponents) cols.emplace_back(component_key(c));
    return cols;
}

std::vector<Cell> report_cells(const ComplementarityReport& r) {
    std::vector<Cell> cells = {std::string(relation_key(r.relation)),
                               static_cast<std::int64_t>(r.n),
                               r.lhs,
                               r.rhs,
                               r.residual,
                               r.satisfied,
                               r.is_identity};
    for (Component c : kAllComponents) {
        if (const auto v = r.components.get(c)) {
            cells.emplace_back(*v);
        } else {
            cells.emplace_back(std::monostate{});
        }
    }
    return cells;
}

}  // namespace duality
