// Copyright 2026 The permpoly Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "permpoly/classifier.hpp"
#include "permpoly/equivalence.hpp"
#include "permpoly/hermite_symbolic.hpp"

namespace {

using namespace permpoly;

// One x^3 slice of the normalized search.
void BM_SearchSlice(benchmark::State& state) {
  ClassifyOptions o;
  o.mode = state.range(1) != 0 ? SearchMode::kFast : SearchMode::kVerify;
  o.force_filters = true;
  const SearchPlan plan(static_cast<int>(state.range(0)), 7, o);
  std::uint32_t slice = 0;
  std::uint64_t candidates = 0;
  for (auto _ : state) {
    const SearchPartial p = plan.run_slice(slice);
    candidates += p.candidates_tested;
    slice = (slice + 1) % plan.slice_count();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(candidates));
}
BENCHMARK(BM_SearchSlice)
    ->Args({6, 0})
    ->Args({6, 1})
    ->Args({7, 0})
    ->Args({7, 1})
    ->Unit(benchmark::kMillisecond);

void BM_HermiteSymbolic(benchmark::State& state) {
  const auto u = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_symbolic_for_field(6, 9, u, {{1, 1}}));
}
BENCHMARK(BM_HermiteSymbolic)->Arg(2)->Arg(6)->Arg(40);

void BM_CanonicalForm(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(3);
  std::vector<GFElem> co(7);
  for (auto& c : co) c = GFElem(static_cast<std::uint32_t>(rng() % ctx.order()));
  co[6] = kOne;
  const FieldPoly f(ctx, co);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(f));
}
BENCHMARK(BM_CanonicalForm)->Arg(3)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
