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
#include <span>

namespace permpoly {

// Multinomial (n; parts...) mod prime p via the digit-wise Lucas product.
// Throws PartitionMismatch when the parts do not sum to n.
std::uint64_t multinomial_mod_p(std::uint64_t n, std::span<const std::uint64_t> parts,
                                std::uint64_t p);

// True iff (n; parts...) is odd, i.e. the binary digits of the parts are
// pairwise disjoint (and hence partition the digits of n).
bool multinomial_odd(std::uint64_t n, std::span<const std::uint64_t> parts);

// 2^t = deg * m + r with 0 <= r < deg.
struct WrapParams {
  int deg = 0;
  int t = 0;
  std::uint64_t m = 0;
  std::uint64_t r = 0;

  std::uint64_t q() const { return std::uint64_t{1} << t; }
};

// Throws FieldTooSmall when 2^t <= deg.
WrapParams wrap_params(int deg, int t);

// Period (in t) of the binary pattern of m: 2 for degree 6, 3 for degree 7.
int wrap_period(int deg);

}  // namespace permpoly
