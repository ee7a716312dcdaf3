// Copyright 2026 The orbicount Authors
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

#include "benchmark/benchmark.h"
#include "orbicount/potential.h"

namespace orbicount {
namespace {

void BM_AssemblePotential(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(AssemblePotential(n));
  }
}
BENCHMARK(BM_AssemblePotential)->RangeMultiplier(2)->Range(8, 128);

void BM_ComparePotentials(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Potential lhs = AssemblePotential(n);
  const Potential rhs = StReferencePotential(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComparePotentials(lhs, rhs));
  }
}
BENCHMARK(BM_ComparePotentials)->RangeMultiplier(2)->Range(8, 128);

}  // namespace
}  // namespace orbicount

BENCHMARK_MAIN();
