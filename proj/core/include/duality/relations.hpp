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

// Left- and right-hand sides of the complementarity relations, assembled
// from the interferometer output and reported with every intermediate term.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duality/config.hpp"
#include "duality/discrimination.hpp"
#include "duality/interferometer.hpp"
#include "duality/states.hpp"
#include "duality/table.hpp"

namespace duality {

enum class RelationId {
    Th1Duality,       ///< (Ps-1/n)^2 + V^2 <= (1-1/n)^2 - 2(n-1)/n^2 (Tr rD^2 - Tr rA^2)
    Eq13NoMemory,     ///< (Ps-1/n)^2 + V^2 <= (1-1/n)^2, memory dimension 1
    Cor1N2Identity,   ///< n = 2 equality form of Th1Duality
    Th2Mixedness,     ///< (Ps-1/n)^2 + V^2 + M(rA) <= (1-1/n)^2 + M(rD)
    Cor2N2Identity,   ///< n = 2, |<d1|d2>|^2 = 1/2: (Ps-1/2)^2 + V^2/2 + M(rA)/2 = 1/4
    Th3Entanglement,  ///< (Ps-1/n)^2 + V^2 + E^2 <= (n^2-1)/n^2 - 2(n-1)/n^2 Tr rAB^2
    Eq1Prior,         ///< (Ps-1/n)^2 + X^2 <= (1-1/n)^2
    Eq2PriorMemory,   ///< (Ps-1/n)^2 + X^2 <= (1-1/n)^2 + 2(n-1)/n^2 (Tr rA^2 - Tr rAB^2)
    LimitPdV,         ///< identical memory branches: (Ps-1/n)^2 + V^2 <= (1-1/n)^2
    LimitPdE,         ///< orthonormal memory branches: (Ps-1/n)^2 + E^2 <= Th3 right-hand side
};

inline constexpr std::array<RelationId, 10> kAllRelations = {
    RelationId::Th1Duality,     RelationId::Eq13NoMemory,   RelationId::Cor1N2Identity,
    RelationId::Th2Mixedness,   RelationId::Cor2N2Identity, RelationId::Th3Entanglement,
    RelationId::Eq1Prior,       RelationId::Eq2PriorMemory, RelationId::LimitPdV,
    RelationId::LimitPdE,
};

/// Short lowercase key: th1, eq13, cor1, th2, cor2, th3, eq1, eq2, limit_pd_v, limit_pd_e.
std::string_view relation_key(RelationId id);
std::optional<RelationId> parse_relation(std::string_view key);

enum class Component { Pd2, V2, X2, MA, MD, E2, PurityA, PurityD, PurityAB, Ps };

inline constexpr std::array<Component, 10> kAllComponents = {
    Component::Pd2, Component::V2,      Component::X2,      Component::MA,       Component::MD,
    Component::E2,  Component::PurityA, Component::PurityD, Component::PurityAB, Component::Ps,
};

std::string_view component_key(Component c);

class Components {
public:
    void set(Component c, double v) { values_[static_cast<std::size_t>(c)] = v; }
    std::optional<double> get(Component c) const { return values_[static_cast<std::size_t>(c)]; }
    /// Throws std::out_of_range when the component was not computed.
    double at(Component c) const;

private:
    std::array<std::optional<double>, kAllComponents.size()> values_{};
};

struct ComplementarityReport {
    RelationId relation;
    std::size_t n;
    double lhs;
    double rhs;
    /// rhs - lhs
    double residual;
    /// Identities: |residual| <= tol. Inequalities: residual >= -tol.
    bool satisfied;
    bool is_identity;
    Components components;
};

/// Which success probability enters the path distinguishability term.
enum class PdMode {
    UpperBound,  ///< closed-form bound (what the proofs use)
    Oracle,      ///< numerically optimized POVM
};

struct EvalOptions {
    PdMode pd = PdMode::UpperBound;
    OptimizeOptions optimizer{};
    Tolerances tol{};
};

ComplementarityReport eval_th1(const DensityMatrix& rho, const DetectorConfig& det,
                               const EvalOptions& opt = {});
/// Throws ContractError unless rho.dim_b() == 1.
ComplementarityReport eval_eq13(const DensityMatrix& rho, const DetectorConfig& det,
                                const EvalOptions& opt = {});
/// Uses the exact two-state optimum. Throws ContractError unless n = 2.
ComplementarityReport eval_cor1(const DensityMatrix& rho, const DetectorConfig& det,
                                const EvalOptions& opt = {});
ComplementarityReport eval_th2(const DensityMatrix& rho, const DetectorConfig& det,
                               const EvalOptions& opt = {});
/// Throws ContractError unless n = 2 and |<d1|d2>|^2 = 1/2 within 1e-12.
ComplementarityReport eval_cor2(const DensityMatrix& rho, const DetectorConfig& det,
                                const EvalOptions& opt = {});
/// Entanglement of the input state via the Wootters formula (2x2) or, for pure
/// inputs of any size, the marginal purity. Other inputs throw
/// UnsupportedDimension.
ComplementarityReport eval_th3(const DensityMatrix& rho, const DetectorConfig& det,
                               const EvalOptions& opt = {});
ComplementarityReport eval_th3(const PureBipartite& psi, const DetectorConfig& det,
                               const EvalOptions& opt = {});
/// `which` is LimitPdV (all branch overlaps 1) or LimitPdE (branches
/// orthonormal); the branch condition is checked to 1e-9 and violations throw
/// ContractError. At n = 2 the report is an identity.
ComplementarityReport eval_limits(const PureBipartite& psi, const DetectorConfig& det, RelationId which,
                                  const EvalOptions& opt = {});
/// Reports for Eq1Prior and Eq2PriorMemory; purities in the latter are
/// taken after the detector coupling.
std::pair<ComplementarityReport, ComplementarityReport> eval_priors(const DensityMatrix& rho,
                                                                    const DetectorConfig& det,
                                                                    const EvalOptions& opt = {});

/// Dispatch on `id` for a mixed-state input. Limit relations need a pure
/// input and throw ContractError here.
ComplementarityReport evaluate(RelationId id, const DensityMatrix& rho, const DetectorConfig& det,
                               const EvalOptions& opt = {});
ComplementarityReport evaluate(RelationId id, const PureBipartite& psi, const DetectorConfig& det,
                               const EvalOptions& opt = {});

/// True when every computed component lies in its admissible range.
bool components_in_range(const ComplementarityReport& r, double slack = 1e-10);

std::string report_to_json(const ComplementarityReport& r);
/// Column names for report rows: relation, n, lhs, rhs, residual, satisfied,
/// is_identity, then one column per Component.
std::vector<std::string> report_columns();
std::vector<Cell> report_cells(const ComplementarityReport& r);

}  // namespace duality
