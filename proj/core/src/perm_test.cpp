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

#include "permpoly/perm_test.hpp"

#include <vector>

#include "permpoly/error.hpp"

namespace permpoly {

PermVerdict is_pp_exhaustive(const FieldPoly& f) {
  const FieldCtx& ctx = f.field();
  const std::uint32_t q = ctx.order();
  std::vector<std::uint64_t> seen((q + 63) / 64, 0);
  // preimage[y] is only read for images already marked in `seen`.
  std::vector<std::uint32_t> preimage(q, 0);
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t y = poly_eval(f, GFElem(x)).bits;
    const std::uint64_t bit = std::uint64_t{1} << (y & 63);
    if (seen[y >> 6] & bit) {
      PermVerdict v;
      v.collision = std::make_pair(GFElem(preimage[y]), GFElem(x));
      return v;
    }
    seen[y >> 6] |= bit;
    preimage[y] = x;
  }
  PermVerdict ok;
  ok.is_pp = true;
  return ok;
}

PermVerdict hermite_dickson_test(const FieldPoly& f) {
  const FieldCtx& ctx = f.field();
  const std::uint64_t q = ctx.order();
  if (f.degree() >= static_cast<int>(q)) {
    throw Error(ErrorCode::kDegreeTooLarge,
                "degree " + std::to_string(f.degree()) + " >= q = " + std::to_string(q));
  }
  PermVerdict v;
  if (f.is_zero()) {
    v.failure = RootCountNotOne{q};
    return v;
  }
  const std::size_t roots = count_roots(f);
  if (roots != 1) {
    v.failure = RootCountNotOne{roots};
    return v;
  }
  if (q > 2) {
    OddPowerLadder ladder(f);
    while (true) {
      if (!ladder.current()[q - 1].is_zero()) {
        v.failure = ExponentDegreeTooHigh{ladder.exponent()};
        return v;
      }
      if (ladder.exponent() + 2 > q - 2) break;
      ladder.advance();
    }
  }
  v.is_pp = true;
  return v;
}

std::string describe(const PermVerdict& v, const FieldCtx& ctx) {
  if (v.is_pp) return "is_pp: true";
  std::string out = "is_pp: false";
  if (v.failure) {
    if (const auto* r = std::get_if<RootCountNotOne>(&*v.failure)) {
      out += " (RootCountNotOne: " + std::to_string(r->roots) + " roots)";
    } else {
      const auto& e = std::get<ExponentDegreeTooHigh>(*v.failure);
      out += " (ExponentDegreeTooHigh: n = " + std::to_string(e.n) + ")";
    }
  }
  if (v.collision) {
    out += " (collision: f(" + ctx.display(v.collision->first) + ") = f(" +
           ctx.display(v.collision->second) + "))";
  }
  return out;
}

}  // namespace permpoly
