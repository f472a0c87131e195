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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permpoly/digitcomb.hpp"
#include "permpoly/error.hpp"

namespace permpoly {
namespace {

TEST(MultinomialModP, Examples) {
  const std::vector<std::uint64_t> p47 = {32, 8, 4, 2, 1};
  EXPECT_EQ(multinomial_mod_p(47, p47, 2), 1U);
  const std::vector<std::uint64_t> ones = {1, 1};
  EXPECT_EQ(multinomial_mod_p(2, ones, 2), 0U);
  const std::vector<std::uint64_t> p4 = {1, 3};
  EXPECT_EQ(multinomial_mod_p(4, p4, 3), 1U);
}

TEST(MultinomialModP, PartitionMismatch) {
  const std::vector<std::uint64_t> parts = {1, 2};
  try {
    multinomial_mod_p(4, parts, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPartitionMismatch);
  }
  EXPECT_THROW(multinomial_odd(4, parts), Error);
}

TEST(MultinomialModP, AgreesWithFactorials) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 3000; ++i) {
    const std::uint32_t n = static_cast<std::uint32_t>(rng() % 65);
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<std::uint64_t> parts;
    std::uint64_t left = n;
    for (int j = 0; j + 1 < k; ++j) {
      const std::uint64_t take = left ? rng() % (left + 1) : 0;
      parts.push_back(take);
      left -= take;
    }
    parts.push_back(left);
    for (std::uint32_t p : {2U, 3U, 5U}) {
      ASSERT_EQ(multinomial_mod_p(n, parts, p), oracle::multinomial_factorial(n, parts, p))
          << "n=" << n << " p=" << p;
    }
  }
}

TEST(MultinomialOdd, Examples) {
  const std::vector<std::uint64_t> whole = {9, 0, 0};
  EXPECT_TRUE(multinomial_odd(9, whole));
  const std::vector<std::uint64_t> p47 = {32, 8, 4, 2, 1};
  EXPECT_TRUE(multinomial_odd(47, p47));
  const std::vector<std::uint64_t> ones = {1, 1};
  EXPECT_FALSE(multinomial_odd(2, ones));
}

TEST(MultinomialOdd, MatchesModTwo) {
  std::mt19937_64 rng(47);
  for (std::uint64_t n = 0; n < 4096; n += 1 + rng() % 3) {
    std::vector<std::uint64_t> parts;
    std::uint64_t left = n;
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j + 1 < k; ++j) {
      // Bias toward submasks so both outcomes occur.
      const std::uint64_t take = (rng() & 1) ? (left & rng()) : rng() % (left + 1);
      parts.push_back(take);
      left -= take;
    }
    parts.push_back(left);
    ASSERT_EQ(multinomial_odd(n, parts), multinomial_mod_p(n, parts, 2) == 1) << n;
  }
}

TEST(WrapParams, Examples) {
  const WrapParams a = wrap_params(6, 8);
  EXPECT_EQ(a.m, 42U);
  EXPECT_EQ(a.r, 4U);
  const WrapParams b = wrap_params(6, 9);
  EXPECT_EQ(b.m, 85U);
  EXPECT_EQ(b.r, 2U);
  const WrapParams c = wrap_params(7, 4);
  EXPECT_EQ(c.m, 2U);
  EXPECT_EQ(c.r, 2U);
  try {
    wrap_params(6, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldTooSmall);
  }
}

// Sum of 2^i for i = first, first + step, ... <= last.
std::uint64_t pattern(int first, int step, int last) {
  std::uint64_t m = 0;
  for (int i = first; i <= last; i += step) m |= std::uint64_t{1} << i;
  return m;
}

TEST(WrapParams, DigitPatterns) {
  for (int t : {6, 8, 10, 12}) {
    const WrapParams w = wrap_params(6, t);
    EXPECT_EQ(w.r, 4U);
    EXPECT_EQ(w.m, pattern(1, 2, t - 3)) << t;
  }
  for (int t : {5, 7, 9, 11}) {
    const WrapParams w = wrap_params(6, t);
    EXPECT_EQ(w.r, 2U);
    EXPECT_EQ(w.m, pattern(0, 2, t - 3)) << t;
  }
  // Degree 7: q = 7m + 2 when t = 1 mod 3, q = 7m + 4 when t = 2 mod 3.
  for (int t : {4, 7, 10, 13}) {
    const WrapParams w = wrap_params(7, t);
    EXPECT_EQ(w.r, 2U);
    EXPECT_EQ(w.m, pattern(1, 3, t - 3)) << t;
  }
  for (int t : {5, 8, 11, 14}) {
    const WrapParams w = wrap_params(7, t);
    EXPECT_EQ(w.r, 4U);
    EXPECT_EQ(w.m, pattern(2, 3, t - 3)) << t;
  }
  for (int t : {3, 6, 9}) EXPECT_EQ(wrap_params(7, t).r, 1U);
}

TEST(WrapPeriod, Values) {
  EXPECT_EQ(wrap_period(6), 2);
  EXPECT_EQ(wrap_period(7), 3);
  EXPECT_THROW(wrap_period(5), Error);
}

}  // namespace
}  // namespace permpoly
