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
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/gf2t.hpp"

namespace permpoly {

// Univariate polynomial over a FieldCtx, dense coefficients from the
// constant term upward. The highest stored coefficient is always nonzero;
// the zero polynomial stores nothing and has degree -1.
class FieldPoly {
 public:
  explicit FieldPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
  FieldPoly(FieldCtx ctx, std::vector<GFElem> coeffs);

  static FieldPoly monomial(const FieldCtx& ctx, int k, GFElem coeff = kOne);

  const FieldCtx& field() const { return ctx_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const GFElem> coeffs() const { return coeffs_; }
  GFElem coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : kZero;
  }
  GFElem leading() const { return is_zero() ? kZero : coeffs_.back(); }

  FieldPoly with_coeff(int k, GFElem value) const;

  friend FieldPoly operator+(const FieldPoly& f, const FieldPoly& g);
  friend FieldPoly operator*(const FieldPoly& f, const FieldPoly& g);
  FieldPoly scaled(GFElem s) const;

  friend bool operator==(const FieldPoly& f, const FieldPoly& g) {
    return f.ctx_ == g.ctx_ && f.coeffs_ == g.coeffs_;
  }

 private:
  void trim();

  FieldCtx ctx_;
  std::vector<GFElem> coeffs_;
};

GFElem poly_eval(const FieldPoly& f, GFElem x);

// a * f(b x + c) + d, expanded.
FieldPoly compose_affine(const FieldPoly& f, GFElem a, GFElem b, GFElem c, GFElem d);

// Squares every coefficient `power` times (psi^power).
FieldPoly frobenius_map(const FieldPoly& f, int power = 1);

// Polynomials reduced modulo x^q - x are dense vectors of length q. Exponent
// 0 is fixed; e >= 1 reduces to ((e - 1) mod (q - 1)) + 1, so x^q becomes x.
using ReducedPoly = std::vector<GFElem>;

ReducedPoly reduce_mod_xq(const FieldPoly& f);
ReducedPoly reduced_mul(const FieldCtx& ctx, const ReducedPoly& a, const ReducedPoly& b);
ReducedPoly reduced_pow(const FieldPoly& f, std::uint64_t n);

// Coefficient of x^k in f^n mod (x^q - x). Throws ExponentOutOfRange if k >= q.
GFElem powmod_coefficient(const FieldPoly& f, std::uint64_t n, std::uint64_t k);

// Walks f^1, f^3, f^5, ... reduced mod x^q - x, multiplying by f^2 each step.
class OddPowerLadder {
 public:
  explicit OddPowerLadder(const FieldPoly& f);

  std::uint64_t exponent() const { return n_; }
  const ReducedPoly& current() const { return current_; }
  void advance();

 private:
  FieldCtx ctx_;
  ReducedPoly square_;
  ReducedPoly current_;
  std::uint64_t n_ = 1;
};

// Number of distinct roots in the field, by enumeration. Throws
// ZeroPolynomial for f = 0.
std::size_t count_roots(const FieldPoly& f);

// Literal grammar: terms `coeff*x^k | x^k | coeff` joined by '+', with
// coefficient tokens `0 | 1 | a^k | 0x<hex>` (a = the field generator).
// `x` and `a` alone mean x^1 and a^1.
FieldPoly parse_poly(const FieldCtx& ctx, std::string_view text);
std::string to_string(const FieldPoly& f);

}  // namespace permpoly
