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

#include <cstdint>

#include "benchmark/benchmark.h"
#include "orbicount/lattice.h"

namespace orbicount {
namespace {

void BM_EnumerateSublattices(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateSublattices(d));
  }
  state.SetComplexityN(d);
}
BENCHMARK(BM_EnumerateSublattices)->RangeMultiplier(4)->Range(1, 4096)->Complexity();

void BM_HnfReduce(benchmark::State& state) {
  const Basis2 basis{{Integer(state.range(0)), Integer(7)},
                     {Integer(-3), Integer(state.range(0) + 11)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(HnfReduce(basis));
  }
}
BENCHMARK(BM_HnfReduce)->Range(8, 1 << 20);

void BM_Sigma1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Sigma1(state.range(0)));
  }
}
BENCHMARK(BM_Sigma1)->Range(8, 10000);

}  // namespace
}  // namespace orbicount

BENCHMARK_MAIN();
