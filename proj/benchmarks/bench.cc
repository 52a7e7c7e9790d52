// Copyright 2026 The redchar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "redchar/chartab.h"
#include "redchar/classes.h"
#include "redchar/classfn.h"
#include "redchar/cyclo.h"
#include "redchar/groups.h"
#include "redchar/sl3.h"

namespace redchar {
namespace {

Cyc random_cyc(std::mt19937& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> d(-9, 9);
  Cyc c;
  for (std::uint32_t k = 0; k < n; ++k) c += Cyc::root_of_unity(n, k) * Rat(d(rng));
  return c;
}

void BM_CycMul(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::mt19937 rng(n);
  const Cyc a = random_cyc(rng, n);
  const Cyc b = random_cyc(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul)->Arg(8)->Arg(24)->Arg(48);

void BM_SO4Construct(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    SO4Group g(q);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SO4Construct)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SymbolicClasses(benchmark::State& state) {
  const SO4Group g(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_classes(g));
}
BENCHMARK(BM_SymbolicClasses)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BruteForceClasses(benchmark::State& state) {
  const SO4Group g(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_classes(g));
}
BENCHMARK(BM_BruteForceClasses)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_VerifyTable(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  so4_classes(q);  // warm the class cache
  for (auto _ : state) benchmark::DoNotOptimize(verify_table(q, false));
}
BENCHMARK(BM_VerifyTable)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto cs = so4_classes(3)->classes;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_irreducibles(cs));
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

void BM_Pgl3Fusion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pgl3_fusion(7));
}
BENCHMARK(BM_Pgl3Fusion)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace redchar

BENCHMARK_MAIN();
