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

#include <cstdint>
#include <map>

#include "permpoly/symbolic.hpp"

namespace permpoly {

// Symbolic value of [x^(q-1)] f^(m+u) mod (x^q - x) for the generic
//   f = x^deg + A_1 x^(deg-1) + ... + A_(deg-1) x,   q = deg*m + r.
//
// Writing f = x * g with g = sum_j A_j x^(deg-1-j) (A_0 = 1) and expanding
// g^(m+u) digit by digit in characteristic 2, each set bit s of m+u picks an
// index ind_s in [0, deg-1]; the selections with sum ind_s * 2^s equal to
// tot = deg*u - r + 1 contribute prod A_(ind_s)^(2^s). Only bits with
// 2^s <= tot matter, which is why the result stabilizes once m has enough
// digits.
//
// `fixed` pins variables to 0 or 1 during the enumeration.
//
// Throws InvalidOffset when tot < 0 and WrapOverlap when deg*(m+u) >= 2(q-1)
// (then x^(2(q-1)) and higher would also fold onto x^(q-1)).
SymPoly hermite_symbolic(int deg, std::uint64_t r, std::uint64_t m, std::uint64_t u,
                         const std::map<int, int>& fixed = {});

// Same, with (m, r) taken from wrap_params(deg, t).
SymPoly hermite_symbolic_for_field(int deg, int t, std::uint64_t u,
                                   const std::map<int, int>& fixed = {});

// True iff the extraction for (deg, t, u) equals the one with m extended by
// two more periods of its digit pattern (i.e. for t + 2 * wrap_period(deg)).
bool hermite_symbolic_stable(int deg, int t, std::uint64_t u, const std::map<int, int>& fixed = {});

}  // namespace permpoly
