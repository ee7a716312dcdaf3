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
#include "orbicount/orbi.h"

namespace orbicount {
namespace {

void BM_CorrelatorSeries(benchmark::State& state) {
  const InsertionTuple ins = {OrbiPoint::kX1, OrbiPoint::kX2, OrbiPoint::kX3,
                              OrbiPoint::kX4};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CorrelatorSeries(ins, n));
  }
}
BENCHMARK(BM_CorrelatorSeries)->RangeMultiplier(2)->Range(8, 128);

void BM_TotalCountSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(TotalCountSeries(n));
  }
}
BENCHMARK(BM_TotalCountSeries)->RangeMultiplier(2)->Range(8, 128);

}  // namespace
}  // namespace orbicount

BENCHMARK_MAIN();
