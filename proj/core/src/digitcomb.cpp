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

#include "permpoly/digitcomb.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "permpoly/error.hpp"

namespace permpoly {

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// C(a, b) mod p for 0 <= b <= a < p; Fermat inverses.
std::uint64_t small_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = mulmod(num, a - i, p);
    den = mulmod(den, i + 1, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

void check_sum(std::uint64_t n, std::span<const std::uint64_t> parts) {
  const std::uint64_t total = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  if (total != n) {
    throw Error(ErrorCode::kPartitionMismatch,
                "parts sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t multinomial_mod_p(std::uint64_t n, std::span<const std::uint64_t> parts,
                                std::uint64_t p) {
  check_sum(n, parts);
  if (p < 2) throw std::invalid_argument("modulus must be a prime");
  std::vector<std::uint64_t> rest(parts.begin(), parts.end());
  std::uint64_t result = 1;
  while (n != 0) {
    const std::uint64_t top = n % p;
    std::uint64_t digit_sum = 0;
    // Digit multinomial (top; b_1, ..., b_r) as a product of binomials.
    std::uint64_t digit_value = 1;
    for (std::uint64_t& k : rest) {
      const std::uint64_t b = k % p;
      k /= p;
      digit_sum += b;
      if (digit_sum > top) return 0;
      digit_value = mulmod(digit_value, small_binomial(digit_sum, b, p), p);
    }
    // A digit mismatch means a carry, and p divides the multinomial.
    if (digit_sum != top) return 0;
    result = mulmod(result, digit_value, p);
    n /= p;
  }
  return result % p;
}

bool multinomial_odd(std::uint64_t n, std::span<const std::uint64_t> parts) {
  check_sum(n, parts);
  std::uint64_t seen = 0;
  for (std::uint64_t k : parts) {
    if (seen & k) return false;
    seen |= k;
  }
  return seen == n;
}

int wrap_period(int deg) {
  // 2^t mod deg, and with it the digit pattern of m, repeats with this period.
  if (deg == 6) return 2;
  if (deg == 7) return 3;
  throw Error(ErrorCode::kUnsupportedShape, "wrap period defined for degrees 6 and 7");
}

WrapParams wrap_params(int deg, int t) {
  if (deg < 2 || t < 1 || t > 62) {
    throw Error(ErrorCode::kFieldTooSmall, "unsupported (deg, t)");
  }
  const std::uint64_t q = std::uint64_t{1} << t;
  if (q <= static_cast<std::uint64_t>(deg)) {
    throw Error(ErrorCode::kFieldTooSmall,
                "2^" + std::to_string(t) + " <= degree " + std::to_string(deg));
  }
  WrapParams w{deg, t, q / deg, q % deg};
  if (deg == 6 && t >= 3) {
    // m's binary digits sit on every other position, ending at bit t-3.
    std::uint64_t expected = 0;
    for (int i = t - 3; i >= 0; i -= 2) expected |= std::uint64_t{1} << i;
    if (w.m != expected) throw std::logic_error("wrap_params: degree-6 digit pattern violated");
  }
  return w;
}

}  // namespace permpoly
