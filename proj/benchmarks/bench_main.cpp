/*
   Copyright 2026 the tfsde authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "tfsde/kernel.hpp"
#include "tfsde/philox.hpp"
#include "tfsde/simulator.hpp"

using namespace tfsde;

static void BM_MittagLefflerSeries(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mittag_leffler({0.75, 1.0}, -2.0));
}
BENCHMARK(BM_MittagLefflerSeries);

static void BM_MittagLefflerAsymptotic(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mittag_leffler({0.75, 1.0}, -80.0));
}
BENCHMARK(BM_MittagLefflerAsymptotic);

static void BM_MainardiSeries(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mainardi({0.25, 1.0}, 2.0));
}
BENCHMARK(BM_MainardiSeries);

static void BM_MainardiContour(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mainardi({0.25, 1.0}, 15.0));
}
BENCHMARK(BM_MainardiContour);

static void BM_GreenSlow(benchmark::State& state) {
  FractionalIndex beta(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(green(beta, GreenKind::Primary, 0.7, 1.3));
}
BENCHMARK(BM_GreenSlow);

static void BM_KernelUpper(benchmark::State& state) {
  FractionalIndex beta(0.5);
  psi(beta, false);  // warm the cache so the bound itself is timed
  for (auto _ : state)
    benchmark::DoNotOptimize(kernel_upper(beta, 1.0, 0.7, 0.4));
}
BENCHMARK(BM_KernelUpper);

static void BM_KeyedNormal(benchmark::State& state) {
  std::uint32_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(keyed_normal(42, 1, 2, i++));
  }
}
BENCHMARK(BM_KeyedNormal);

static void BM_SimulateSmall(benchmark::State& state) {
  SimConfig c;
  c.beta = FractionalIndex(1.0);
  c.replicates = 4;
  c.n_time = 64;
  c.n_space = 128;
  c.x_half_width = 6.0;
  for (auto _ : state) {
    auto r = simulate(c);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SimulateSmall)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
