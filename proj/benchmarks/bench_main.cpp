// Copyright 2026 The qlattice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qlattice/grassmann.hpp"
#include "qlattice/verify.hpp"

namespace {

using namespace qlattice;

void BM_Enumerate(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int k = static_cast<int>(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_grassmannian(Field::get(q), n, k));
}
BENCHMARK(BM_Enumerate)->Args({2, 6, 3})->Args({3, 5, 2})->Args({4, 4, 2});

void BM_FamilyShadow(benchmark::State& state) {
  const auto full = SubspaceFamily::full_level(2, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(shadow(full));
}
BENCHMARK(BM_FamilyShadow)->Arg(4)->Arg(5)->Arg(6);

void BM_IndexedShadow(benchmark::State& state) {
  const LevelIndex level(2, 5, 2);
  Rng rng(1);
  const auto members = sample_bernoulli(level, 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(level.shadow_size(members));
}
BENCHMARK(BM_IndexedShadow);

void BM_GraphBuild(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(GrassmannGraph(q, n, 2));
}
BENCHMARK(BM_GraphBuild)->Args({2, 4})->Args({2, 5})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const GrassmannGraph g(2, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_check(g));
}
BENCHMARK(BM_Spectrum)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ShadowMinExhaustive(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        shadow_min_search(2, 4, 2, static_cast<std::size_t>(state.range(0)),
                          SearchMode::Exhaustive, 0));
}
BENCHMARK(BM_ShadowMinExhaustive)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
