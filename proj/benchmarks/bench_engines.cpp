// Copyright 2026 The wvjoint Authors
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

#include "wvjoint/expm_oracle.hpp"
#include "wvjoint/gaussian_meter.hpp"
#include "wvjoint/grid_oracle.hpp"
#include "wvjoint/hardy.hpp"
#include "wvjoint/qubit_meter.hpp"
#include "wvjoint/scenarios.hpp"

namespace {

using namespace wvjoint;

scenarios::PairScenario scenario(scenarios::PairKind kind) {
    scenarios::Rng rng(17);
    return scenarios::random_scenario(kind, 4, rng);
}

void BM_GaussianMoments(benchmark::State &state) {
    const auto kind = state.range(0) ? scenarios::PairKind::Projector : scenarios::PairKind::Involutory;
    const auto s = scenario(kind);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gaussian::moments(gaussian::postselect(s.pre, s.post, s.a, s.b, 1.3, 1.0)));
    }
}
BENCHMARK(BM_GaussianMoments)->Arg(0)->Arg(1);

void BM_ExpmOracle(benchmark::State &state) {
    const auto s = scenario(scenarios::PairKind::Involutory);
    const int nodes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expm_oracle::moments(s.pre, s.post, s.a, s.b, 1.3, 1.0, nodes));
    }
}
BENCHMARK(BM_ExpmOracle)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GridRun(benchmark::State &state) {
    const auto s = scenario(scenarios::PairKind::Projector);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid::run(s.pre, s.post, s.a, s.b, 1.3, 1.0, n));
    }
}
BENCHMARK(BM_GridRun)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_QubitMeter(benchmark::State &state) {
    const auto h = hardy::build_scenario(hardy::MeterKind::Qubit);
    const auto [a, b] = hardy::case_pair(h, 4);
    const qubit::QubitMeterScenario q{h.pre, h.post, a, b, hilbert::Ket{1.0, 0.0, 0.0, 0.0},
                                      hilbert::pauli::x(), hilbert::pauli::x(), 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qubit::evolve_postselect_qubit(q));
    }
}
BENCHMARK(BM_QubitMeter);

void BM_HardyContinuousCurve(benchmark::State &state) {
    const auto h = hardy::build_scenario(hardy::MeterKind::Continuous);
    for (auto _ : state) {
        for (int k = 1; k <= 200; ++k) {
            benchmark::DoNotOptimize(hardy::p_continuous(h, 4, 0.025 * k));
        }
    }
}
BENCHMARK(BM_HardyContinuousCurve)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
