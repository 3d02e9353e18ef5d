/*
Copyright 2026 The Amodal Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <cmath>

#include "amodal/complexity.h"
#include "amodal/disocclusion.h"
#include "amodal/heat.h"
#include "amodal/hypothesis.h"
#include "amodal/mask_init.h"
#include "support/scenes.h"

namespace {

using namespace amodal;

void BM_HeatConvolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ScalarField f = ScalarField::from_mask(testing::disk(n, n / 2.0, n / 2.0, n / 4.0));
  for (auto _ : state) benchmark::DoNotOptimize(heat_convolve(f, std::sqrt(12.0)));
}
BENCHMARK(BM_HeatConvolve)->Arg(64)->Arg(128)->Arg(256);

void BM_SignedDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BinaryMask m = testing::random_mask(n, n, 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(signed_distance(m));
}
BENCHMARK(BM_SignedDistance)->Arg(64)->Arg(128)->Arg(256);

void BM_Inpaint(benchmark::State& state) {
  const auto s = testing::notched_disk();
  const VoteThreshold init = initialize_fill(s.visible, s.mask, kDefaultFitWindow);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inpaint(s.visible, s.mask, init.fill, {}));
  }
}
BENCHMARK(BM_Inpaint)->Unit(benchmark::kMillisecond);

void BM_ShapeComplexity(benchmark::State& state) {
  const BinaryMask m = testing::square_over_disk().x2;
  for (auto _ : state) benchmark::DoNotOptimize(shape_complexity(m));
}
BENCHMARK(BM_ShapeComplexity);

void BM_FullInterpretation(benchmark::State& state) {
  const SceneInput s = testing::square_over_disk();
  for (auto _ : state) benchmark::DoNotOptimize(interpret(build_hypotheses(s)));
}
BENCHMARK(BM_FullInterpretation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
