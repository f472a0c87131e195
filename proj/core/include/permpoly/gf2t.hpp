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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permpoly {

// Element of GF(2^t) in the polynomial basis: bit i is the coefficient of
// x^i in the residue representative. Addition is XOR.
struct GFElem {
  std::uint32_t bits = 0;

  constexpr GFElem() = default;
  constexpr explicit GFElem(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }

  friend constexpr GFElem operator+(GFElem x, GFElem y) { return GFElem(x.bits ^ y.bits); }
  constexpr GFElem& operator+=(GFElem y) {
    bits ^= y.bits;
    return *this;
  }
  friend constexpr bool operator==(GFElem, GFElem) = default;
  friend constexpr auto operator<=>(GFElem, GFElem) = default;
};

inline constexpr GFElem kZero{0};
inline constexpr GFElem kOne{1};

inline constexpr int kMinExtensionDegree = 2;
inline constexpr int kMaxExtensionDegree = 16;

// GF(2^t) for 2 <= t <= 16, defined by an irreducible modulus. Arithmetic is
// table driven: log/antilog tables with respect to a primitive generator.
// Contexts are immutable and cheap to copy; copies share the tables.
class FieldCtx {
 public:
  // Builds GF(2^t). Without an explicit modulus the default one for t is used:
  // the smallest irreducible whose root is primitive, else a shipped
  // primitive polynomial. Throws UnsupportedDegree or ModulusNotIrreducible.
  static FieldCtx create(int t, std::optional<std::uint32_t> modulus = std::nullopt);

  static std::uint32_t default_modulus(int t);

  int degree() const { return tables_->t; }
  std::uint32_t order() const { return tables_->q; }
  std::uint32_t modulus() const { return tables_->modulus; }
  GFElem generator() const { return tables_->generator; }
  // Smallest (by bit mask) element of absolute trace one.
  GFElem trace_one() const { return tables_->trace_one; }

  bool contains(GFElem x) const { return x.bits < tables_->q; }

  GFElem add(GFElem x, GFElem y) const { return x + y; }

  GFElem mul(GFElem x, GFElem y) const {
    if (x.bits == 0 || y.bits == 0) return kZero;
    const auto& tb = *tables_;
    return GFElem(tb.antilog[tb.log[x.bits] + tb.log[y.bits]]);
  }

  GFElem square(GFElem x) const { return mul(x, x); }
  // 0^0 is 1.
  GFElem pow(GFElem x, std::uint64_t n) const;
  // Throws DivisionByZero for x = 0.
  GFElem inv(GFElem x) const;
  GFElem div(GFElem x, GFElem y) const { return mul(x, inv(y)); }
  // Unique square root (Frobenius is a bijection).
  GFElem sqrt(GFElem x) const;
  // Applies the Frobenius map x -> x^(2^k).
  GFElem frobenius(GFElem x, int k) const;

  int trace(GFElem x) const;

  // A root r of r^2 + r = b (the other is r + 1), or nothing when Tr(b) = 1.
  std::optional<GFElem> solve_artin_schreier(GFElem b) const;

  // Discrete log base the generator; x must be nonzero.
  std::uint32_t log(GFElem x) const;
  // generator^k.
  GFElem exp(std::uint64_t k) const;

  // "0", "1", or "a^k" with k the discrete log.
  std::string display(GFElem x) const;

  // Raw tables for the search kernels. log has q entries (log[0] unused);
  // antilog has 2(q-1) entries so that antilog[log x + log y] needs no
  // reduction.
  std::span<const std::uint32_t> log_table() const { return tables_->log; }
  std::span<const std::uint32_t> antilog_table() const { return tables_->antilog; }

  std::vector<GFElem> elements() const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.tables_ == b.tables_ ||
           (a.degree() == b.degree() && a.modulus() == b.modulus());
  }

 private:
  struct Tables {
    int t = 0;
    std::uint32_t q = 0;
    std::uint32_t modulus = 0;
    GFElem generator;
    GFElem trace_one;
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> antilog;
  };

  explicit FieldCtx(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}

  std::shared_ptr<const Tables> tables_;
};

namespace gf2x {

// Carry-less arithmetic on F_2[x] polynomials packed into integers.
int degree(std::uint64_t p);
std::uint64_t mod(std::uint64_t a, std::uint64_t m);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
bool is_irreducible(std::uint64_t p);

}  // namespace gf2x

}  // namespace permpoly
