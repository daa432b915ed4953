// Copyright 2026 The weillab Authors
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

#include "weillab/weillab.hpp"
#ifdef WEILLAB_BENCH_CLI
#include "weillab/cli/cli.hpp"
#endif

namespace {

using namespace weillab;

void BM_EnumerateClasses(benchmark::State& state) {
  const i64 q = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_classes(q));
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(97)->Arg(1024)->Arg(9973)->Arg(999983);

void BM_IsIrreducible(benchmark::State& state) {
  const WeilQuartic f = make_weil_quartic(state.range(0), 1, 1 - state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_irreducible_over_Q(f));
  }
}
BENCHMARK(BM_IsIrreducible)->Arg(8)->Arg(9973)->Arg(65536)->Arg(999983);

void BM_ClassifyAndVerdict(benchmark::State& state) {
  const WeilQuartic f = make_weil_quartic(8, 1, -7);
  for (auto _ : state) {
    const ClassKind k = classify(f);
    benchmark::DoNotOptimize(genus3_verdict(f, k));
  }
}
BENCHMARK(BM_ClassifyAndVerdict);

void BM_Label(benchmark::State& state) {
  const WeilQuartic f = make_weil_quartic(13, 0, -11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_label(render_label(f)));
  }
}
BENCHMARK(BM_Label);

#ifdef WEILLAB_BENCH_CLI
void BM_EnumerateRecords(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cli::enumerate_records(2, state.range(0), 1));
  }
}
BENCHMARK(BM_EnumerateRecords)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
#endif

}  // namespace

BENCHMARK_MAIN();
