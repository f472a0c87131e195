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

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permpoly/gf2t.hpp"

namespace permpoly {

// Symbolic coefficients A_1..A_10, printed as the letters a..j.
inline constexpr int kMaxSymVars = 10;

char var_letter(int var);
int var_index(char letter);

// Monomial in A_1..A_10; exps[i - 1] is the exponent of A_i. The all-zero
// monomial is 1.
struct SymMonomial {
  std::array<std::uint32_t, kMaxSymVars> exps{};

  static SymMonomial var(int index, std::uint32_t power = 1);

  std::uint32_t exponent(int index) const { return exps[index - 1]; }
  std::uint64_t total_degree() const;
  bool is_one() const;

  friend SymMonomial operator*(const SymMonomial& x, const SymMonomial& y);
  friend bool operator==(const SymMonomial&, const SymMonomial&) = default;
};

struct SymMonomialHash {
  std::size_t operator()(const SymMonomial& m) const noexcept;
};

// Polynomial over F_2 in A_1..A_10: a set of monomials. Addition is the
// symmetric difference, so coefficient parity is handled by insertion.
class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(SymMonomial m) { toggle(m); }

  static SymPoly zero() { return {}; }
  static SymPoly one() { return SymPoly(SymMonomial{}); }
  static SymPoly var(int index, std::uint32_t power = 1) {
    return SymPoly(SymMonomial::var(index, power));
  }

  // Insert if absent, erase if present.
  void toggle(const SymMonomial& m);

  bool is_zero() const { return monos_.empty(); }
  std::size_t size() const { return monos_.size(); }
  bool contains(const SymMonomial& m) const { return monos_.contains(m); }
  const std::unordered_set<SymMonomial, SymMonomialHash>& monomials() const { return monos_; }

  // Monomials in canonical print order.
  std::vector<SymMonomial> sorted() const;

  std::uint32_t degree_in(int var) const;

  SymPoly& operator+=(const SymPoly& other);
  friend SymPoly operator+(SymPoly x, const SymPoly& y) { return x += y; }
  friend SymPoly operator*(const SymPoly& x, const SymPoly& y);
  friend bool operator==(const SymPoly& x, const SymPoly& y) { return x.monos_ == y.monos_; }

 private:
  std::unordered_set<SymMonomial, SymMonomialHash> monos_;
};

SymPoly sym_mul(const SymPoly& p, const SymPoly& q);
SymPoly sym_pow(const SymPoly& p, std::uint64_t n);

// Pins var to 0 (drops monomials containing it) or 1 (erases it).
SymPoly sym_substitute(const SymPoly& p, int var, int value);
SymPoly sym_substitute(const SymPoly& p, const std::map<int, int>& pins);

// Throws UnboundVariable when p mentions a variable missing from assignment.
GFElem sym_eval(const SymPoly& p, const FieldCtx& ctx, const std::map<int, GFElem>& assignment);

// p viewed as a polynomial in var: result[k] is the coefficient of var^k.
std::vector<SymPoly> coefficients_in(const SymPoly& p, int var);

struct SymDivMod {
  SymPoly quotient;
  SymPoly remainder;
};

// Long division in var. The divisor's leading coefficient in var must be 1;
// otherwise throws NonMonicDivisor.
SymDivMod sym_divmod_in_var(const SymPoly& p, const SymPoly& d, int var);

// Canonical text: monomials by ascending total degree, ties broken
// lexicographically on (a, b, c, ...) exponents with higher powers first;
// powers as `b^8`, products by juxtaposition, "0" for the zero polynomial.
std::string to_string(const SymPoly& p);
std::string to_string(const SymMonomial& m);

// Accepts the canonical text and, more generally, expressions with '+',
// juxtaposition or '*' for products, '^' powers, parentheses, and integer
// constants (read mod 2). Whitespace is ignored. Throws ParseError.
SymPoly parse_sympoly(std::string_view text);

}  // namespace permpoly
