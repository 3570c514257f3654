// Copyright 2026 The etale Authors
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

#include <benchmark/benchmark.h>

#include "etale/catalog.hpp"
#include "etale/etale.hpp"
#include "etale/nimrep.hpp"
#include "etale/premodular.hpp"

namespace {

using namespace etale;

const FusionRing& ring(const char* name) { return *builtin_catalog().find_ring(name); }

void BM_CycMultiply(benchmark::State& state) {
  const CycNumber a = CycNumber::root_of_unity(PhaseExponent(3, 35)) + CycNumber(2), b = CycNumber::root_of_unity(PhaseExponent(11, 35));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMultiply);

void BM_NimReps(benchmark::State& state, const char* name) {
  const FusionRing& r = ring(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nimreps(r, static_cast<int>(state.range(0))));
}
BENCHMARK_CAPTURE(BM_NimReps, Ising, "Ising")->DenseRange(1, 4);
BENCHMARK_CAPTURE(BM_NimReps, RepS3, "Rep(S3)")->DenseRange(1, 4);
BENCHMARK_CAPTURE(BM_NimReps, psu25, "psu(2)_5")->DenseRange(1, 3);

void BM_Conformal(benchmark::State& state, const char* name) {
  const FusionRing& r = ring(name);
  const auto chars = dimension_characters(r);
  ConformalOptions opt;
  opt.bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_conformal_dimensions(r, chars.back(), opt));
}
BENCHMARK_CAPTURE(BM_Conformal, Fib, "Fib")->Arg(60)->Arg(120);
BENCHMARK_CAPTURE(BM_Conformal, psu25, "psu(2)_5")->Arg(60);

void BM_Classify(benchmark::State& state, const char* family) {
  const Catalog& catalog = builtin_catalog();
  const Library library = catalog.library();
  const auto cats = expand_family(catalog, *catalog.find(family));
  for (auto _ : state)
    for (const auto& c : cats) benchmark::DoNotOptimize(classify(c, library, {}));
}
BENCHMARK_CAPTURE(BM_Classify, fib, "fib")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, rep_s3, "rep-s3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, psu25, "psu25")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
