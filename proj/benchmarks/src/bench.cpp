// Copyright 2026 The qmsets Authors
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

#include <random>

#include "qmsets/gf2.hpp"
#include "qmsets/partitions.hpp"
#include "qmsets/qc2.hpp"

namespace {

using namespace qmsets;

/// Random nonsingular matrix: identity scrambled by row additions.
GF2Matrix random_nonsingular(std::size_t n, std::mt19937_64 &rng) {
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(BitVec::unit(n, i));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < 4 * n; ++k) {
        const std::size_t i = pick(rng), j = pick(rng);
        if (i != j) rows[i] ^= rows[j];
    }
    return GF2Matrix::from_rows(rows);
}

BitVec random_vector(std::size_t n, std::mt19937_64 &rng) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
    return v;
}

void BM_Invert(benchmark::State &state) {
    std::mt19937_64 rng(1);
    const GF2Matrix a = random_nonsingular(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}
BENCHMARK(BM_Invert)->RangeMultiplier(4)->Range(8, 512);

void BM_Solve(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2);
    const GF2Matrix a = random_nonsingular(n, rng);
    const BitVec b = random_vector(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(solve(a, b));
}
BENCHMARK(BM_Solve)->RangeMultiplier(4)->Range(8, 512);

void BM_Kron(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    const GF2Matrix a = random_nonsingular(n, rng);
    const GF2Matrix b = random_nonsingular(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->RangeMultiplier(2)->Range(4, 32);

void BM_ParitySat(benchmark::State &state) {
    const auto arity = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(4);
    std::vector<bool> table(std::size_t{1} << arity);
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = rng() & 1U;
    const BooleanFunction f(table);
    for (auto _ : state) benchmark::DoNotOptimize(parity_sat(f));
}
BENCHMARK(BM_ParitySat)->DenseRange(1, 4);

void BM_EnumeratePartitions(benchmark::State &state) {
    std::vector<std::string> labels;
    for (std::int64_t i = 0; i < state.range(0); ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    const Universe u(labels);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(u));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(3, 8);

}  // namespace
BENCHMARK_MAIN();
