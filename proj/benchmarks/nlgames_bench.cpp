// Copyright 2026 The nlgames Authors
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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "nlgames/analysis.hpp"
#include "nlgames/box.hpp"
#include "nlgames/game.hpp"
#include "nlgames/quantum.hpp"

namespace nlgames {
namespace {

void BM_BornBox(benchmark::State& state) {
  const QuantumStrategy s = ExampleUnfairStrategy(0.9);
  for (auto _ : state) benchmark::DoNotOptimize(BoxFromStrategy(s));
}
BENCHMARK(BM_BornBox);

void BM_AveragePayoffs(benchmark::State& state) {
  const UtilityTable t = UtilityTable::FromParams({0.5, 1.0});
  const Box box = PrDMixture(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(AveragePayoffs(t, box));
}
BENCHMARK(BM_AveragePayoffs);

void BM_ClosedFormPayoffs(benchmark::State& state) {
  const CanonicalBox c = ToCanonical(PrDMixture(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(PayoffsClosedForm({0.5, 1.0}, c));
}
BENCHMARK(BM_ClosedFormPayoffs);

void BM_IsLocal(benchmark::State& state) {
  // Mixtures around the local/nonlocal boundary exercise both LP outcomes.
  std::vector<Box> boxes;
  for (int k = 0; k <= 20; ++k) boxes.push_back(Mix(0.25 + 0.025 * k, PrBox(), Box::Uniform()));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsLocal(boxes[i]));
    i = (i + 1) % boxes.size();
  }
}
BENCHMARK(BM_IsLocal);

void BM_BestResponse(benchmark::State& state) {
  const QuantumStrategy s = ExampleUnfairStrategy(0.9);
  for (auto _ : state) benchmark::DoNotOptimize(BestResponse(s, {0.5, 1.0}, Player::kBob));
}
BENCHMARK(BM_BestResponse)->Unit(benchmark::kMillisecond);

void BM_PovmScanSlice(benchmark::State& state) {
  ScanGrid grid;
  grid.bs_values = {2.0};
  grid.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(PovmSingletScan(grid));
}
BENCHMARK(BM_PovmScanSlice)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace nlgames

BENCHMARK_MAIN();
