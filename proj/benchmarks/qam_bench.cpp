// Copyright 2026 The QAM Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include <vector>

#include "qam/memory/memory_model.hpp"
#include "qam/memory/storage.hpp"
#include "qam/qsim/gate.hpp"
#include "qam/qsim/state_vector.hpp"
#include "qam/recall/retrieval_circuit.hpp"
#include "qam/thermo/partition.hpp"

namespace {

using namespace qam;

memory::MemoryModel spread_model(std::size_t n, std::size_t p) {
    std::vector<memory::Pattern> patterns;
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::size_t i = 0; i < p; ++i) {
        patterns.push_back(memory::Pattern::from_index((i * 2654435761ULL) % dim, n));
    }
    return memory::MemoryModel(std::move(patterns));
}

void BM_SingleQubitGate(benchmark::State &state) {
    const auto q = static_cast<std::size_t>(state.range(0));
    auto psi = qsim::StateVector::zero(qsim::RegisterLayout{{"q", q}});
    const auto h = qsim::gates::hadamard();
    std::size_t target = 0;
    for (auto _ : state) {
        psi.apply(h, target);
        target = (target + 1) % q;
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << q));
}
BENCHMARK(BM_SingleQubitGate)->DenseRange(10, 22, 4);

void BM_ControlledGate(benchmark::State &state) {
    const auto q = static_cast<std::size_t>(state.range(0));
    auto psi = qsim::StateVector::zero(qsim::RegisterLayout{{"q", q}});
    const auto x = qsim::gates::pauli_x();
    const qsim::Control controls[3] = {{0, true}, {1, false}, {2, true}};
    for (auto _ : state) {
        psi.apply_controlled(x, controls, q - 1);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << q));
}
BENCHMARK(BM_ControlledGate)->DenseRange(10, 22, 4);

void BM_StoreSequential(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto model = spread_model(n, 16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(memory::store_sequential(model));
    }
}
BENCHMARK(BM_StoreSequential)->DenseRange(6, 14, 4);

void BM_BuildFinalState(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto b = static_cast<std::size_t>(state.range(1));
    const auto model = spread_model(n, 8);
    const auto input = memory::Pattern::from_index(1, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(recall::build_final_state(model, input, b));
    }
}
BENCHMARK(BM_BuildFinalState)->Args({8, 2})->Args({12, 4})->Args({16, 4});

void BM_PartitionSum(benchmark::State &state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            thermo::log_partition_average(n, n / 100, 1.0, thermo::AverageMode::kSum));
    }
}
BENCHMARK(BM_PartitionSum)->Arg(10'000)->Arg(1'000'000);

void BM_PartitionIntegral(benchmark::State &state) {
    const double b = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermo::log_partition_average(
            8'000'000, 80'000, b, thermo::AverageMode::kIntegral));
    }
}
BENCHMARK(BM_PartitionIntegral)->Arg(1)->Arg(10'000)->Arg(1'000'000);

} // namespace

BENCHMARK_MAIN();
