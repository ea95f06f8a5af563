// Copyright 2026 The pigame Authors
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

#include <string>

#include <benchmark/benchmark.h>

#include "pigame/allocation.hpp"
#include "pigame/core_geometry.hpp"
#include "pigame/game.hpp"
#include "pigame/instance_io.hpp"

namespace {

using pigame::GameTable;

pigame::PIInstance family(benchmark::State& state) {
  return pigame::builtin_instance("expfamily:" + std::to_string(state.range(0)));
}

void BM_GameTable(benchmark::State& state) {
  const pigame::PIInstance inst = family(state);
  for (auto _ : state) {
    GameTable g(inst);
    benchmark::DoNotOptimize(g.value(g.grand()));
  }
}
BENCHMARK(BM_GameTable)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_LpOracle(benchmark::State& state) {
  const pigame::PIInstance inst = family(state);
  const pigame::Coalition grand = pigame::Coalition::grand(inst.players());
  for (auto _ : state) benchmark::DoNotOptimize(pigame::characteristic_value_lp_oracle(inst, grand));
}
BENCHMARK(BM_LpOracle)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_Shapley(benchmark::State& state) {
  const GameTable g(family(state));
  for (auto _ : state) benchmark::DoNotOptimize(pigame::shapley(g));
}
BENCHMARK(BM_Shapley)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_Nucleolus(benchmark::State& state) {
  const GameTable g(family(state));
  for (auto _ : state) benchmark::DoNotOptimize(pigame::nucleolus(g));
}
BENCHMARK(BM_Nucleolus)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_OmegaPoint(benchmark::State& state) {
  const GameTable g(family(state));
  for (auto _ : state) benchmark::DoNotOptimize(pigame::omega_point(g));
}
BENCHMARK(BM_OmegaPoint)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_CoreMembership(benchmark::State& state) {
  const GameTable g(family(state));
  const pigame::Allocation o = pigame::owen_point(g);
  for (auto _ : state) benchmark::DoNotOptimize(pigame::is_core_member(g, o));
}
BENCHMARK(BM_CoreMembership)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_WalkEnumeration(benchmark::State& state) {
  const GameTable g(family(state));
  for (auto _ : state) benchmark::DoNotOptimize(pigame::generate_extremes_from_owen(g));
}
BENCHMARK(BM_WalkEnumeration)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_VertexEnumeration(benchmark::State& state) {
  const GameTable g(family(state));
  for (auto _ : state) benchmark::DoNotOptimize(pigame::enumerate_core_vertices(g));
}
BENCHMARK(BM_VertexEnumeration)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Example3Analysis(benchmark::State& state) {
  const GameTable g(pigame::builtin_instance("example3"));
  for (auto _ : state) benchmark::DoNotOptimize(pigame::coincidence_report(g));
}
BENCHMARK(BM_Example3Analysis)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
