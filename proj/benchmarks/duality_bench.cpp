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

#include <benchmark/benchmark.h>

#include <vector>

#include "duality/discrimination.hpp"
#include "duality/interferometer.hpp"
#include "duality/measures.hpp"
#include "duality/relations.hpp"
#include "duality/states.hpp"

namespace {

using namespace duality;

// args: paths n, memory dimension m
void BM_ApplyDetectors(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    Rng rng(1);
    const auto rho = random_mixed(n, m, n * m, rng);
    const auto det = DetectorConfig::random(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(apply_detectors(rho, det));
}
BENCHMARK(BM_ApplyDetectors)->Args({2, 2})->Args({3, 3})->Args({5, 4})->Args({5, 5});

void BM_PsOptimize(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    std::vector<Ensemble> ensembles;
    for (int i = 0; i < 64; ++i) {
        std::vector<double> q(n, 1.0 / static_cast<double>(n));
        ensembles.emplace_back(std::move(q), DetectorConfig::random(n, n, rng));
    }
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(ps_optimize(ensembles[i++ % ensembles.size()]).value);
}
BENCHMARK(BM_PsOptimize)->DenseRange(2, 5);

void BM_PsUpperBound(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const Ensemble e(std::vector<double>(n, 1.0 / static_cast<double>(n)), DetectorConfig::random(n, n, rng));
    for (auto _ : state) benchmark::DoNotOptimize(ps_upper_bound(e));
}
BENCHMARK(BM_PsUpperBound)->DenseRange(2, 5);

void BM_ConcurrenceWootters(benchmark::State& state) {
    const auto rho = random_mixed(2, 2, 4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(concurrence_wootters(rho));
}
BENCHMARK(BM_ConcurrenceWootters);

void BM_EvalTh1(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    const auto rho = random_mixed(n, 2, 2 * n, rng);
    const auto det = DetectorConfig::random(n, n, rng);
    EvalOptions opt;
    opt.pd = state.range(1) != 0 ? PdMode::Oracle : PdMode::UpperBound;
    for (auto _ : state) benchmark::DoNotOptimize(eval_th1(rho, det, opt).residual);
}
BENCHMARK(BM_EvalTh1)->ArgsProduct({{2, 3, 5}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
