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

#pragma once

// Random field elements, polynomials and transforms for the tests.

#include <random>
#include <vector>

#include "permpoly/equivalence.hpp"
#include "permpoly/polynomial.hpp"

namespace permpoly::testing_support {

inline GFElem random_elem(std::mt19937_64& rng, const FieldCtx& ctx, bool nonzero = false) {
  std::uniform_int_distribution<std::uint32_t> dist(nonzero ? 1 : 0, ctx.order() - 1);
  return GFElem(dist(rng));
}

// Degree exactly `deg`, every coefficient random.
inline FieldPoly random_poly(std::mt19937_64& rng, const FieldCtx& ctx, int deg) {
  std::vector<GFElem> co(deg + 1);
  for (auto& c : co) c = random_elem(rng, ctx);
  co[deg] = random_elem(rng, ctx, true);
  return FieldPoly(ctx, co);
}

inline Transform random_transform(std::mt19937_64& rng, const FieldCtx& ctx) {
  Transform tr;
  tr.a = random_elem(rng, ctx, true);
  tr.b = random_elem(rng, ctx, true);
  tr.c = random_elem(rng, ctx);
  tr.d = random_elem(rng, ctx);
  tr.frob = static_cast<int>(rng() % static_cast<unsigned>(ctx.degree()));
  return tr;
}

inline std::vector<std::uint32_t> raw_coeffs(const FieldPoly& f) {
  std::vector<std::uint32_t> out;
  for (GFElem c : f.coeffs()) out.push_back(c.bits);
  return out;
}

}  // namespace permpoly::testing_support
