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
#include <vector>

#include <benchmark/benchmark.h>

#include "permpoly/gf2t.hpp"
#include "permpoly/perm_test.hpp"
#include "permpoly/polynomial.hpp"

namespace {

using namespace permpoly;

std::vector<GFElem> random_elems(const FieldCtx& ctx, std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<GFElem> v(n);
  for (auto& x : v) x = GFElem(static_cast<std::uint32_t>(rng() % ctx.order()));
  return v;
}

void BM_FieldMul(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(static_cast<int>(state.range(0)));
  const auto xs = random_elems(ctx, 1024);
  GFElem acc = kOne;
  for (auto _ : state) {
    for (GFElem x : xs) acc = ctx.mul(acc, x) + kOne;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(13)->Arg(16);

void BM_FieldInv(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(13);
  auto xs = random_elems(ctx, 1024);
  for (auto& x : xs) x = x.is_zero() ? kOne : x;
  for (auto _ : state) {
    for (GFElem x : xs) benchmark::DoNotOptimize(ctx.inv(x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldInv);

void BM_IsPpExhaustive(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(static_cast<int>(state.range(0)));
  // x^7 + x^5 + x permutes GF(2^t) for the t used here.
  const FieldPoly f = parse_poly(ctx, "x^7+x^5+x");
  for (auto _ : state) benchmark::DoNotOptimize(is_pp_exhaustive(f).is_pp);
}
BENCHMARK(BM_IsPpExhaustive)->Arg(5)->Arg(8)->Arg(11);

void BM_HermiteDickson(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(static_cast<int>(state.range(0)));
  const FieldPoly f = parse_poly(ctx, "x^7+x^5+x");
  for (auto _ : state) benchmark::DoNotOptimize(hermite_dickson_test(f).is_pp);
}
BENCHMARK(BM_HermiteDickson)->Arg(5)->Arg(7);

void BM_PowmodCoefficient(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::create(10);
  const FieldPoly f = parse_poly(ctx, "x^7+a^3*x^5+a^7*x^4+x^3+a^100*x^2+a^5*x");
  for (auto _ : state) benchmark::DoNotOptimize(powmod_coefficient(f, 165, ctx.order() - 1));
}
BENCHMARK(BM_PowmodCoefficient);

}  // namespace
