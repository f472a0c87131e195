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

#include "permpoly/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "permpoly/error.hpp"

namespace permpoly {

namespace {

void check_var(int var) {
  if (var < 1 || var > kMaxSymVars) {
    throw Error(ErrorCode::kUnboundVariable, "variable index " + std::to_string(var) + " out of range");
  }
}

}  // namespace

char var_letter(int var) {
  check_var(var);
  return static_cast<char>('a' + var - 1);
}

int var_index(char letter) {
  if (letter < 'a' || letter >= 'a' + kMaxSymVars) {
    throw Error(ErrorCode::kParseError, std::string("unknown variable '") + letter + "'");
  }
  return letter - 'a' + 1;
}

SymMonomial SymMonomial::var(int index, std::uint32_t power) {
  check_var(index);
  SymMonomial m;
  m.exps[index - 1] = power;
  return m;
}

std::uint64_t SymMonomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool SymMonomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

SymMonomial operator*(const SymMonomial& x, const SymMonomial& y) {
  SymMonomial m;
  for (int i = 0; i < kMaxSymVars; ++i) m.exps[i] = x.exps[i] + y.exps[i];
  return m;
}

std::size_t SymMonomialHash::operator()(const SymMonomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exps) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

void SymPoly::toggle(const SymMonomial& m) {
  if (auto it = monos_.find(m); it != monos_.end()) {
    monos_.erase(it);
  } else {
    monos_.insert(m);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  for (const auto& m : other.monos_) toggle(m);
  return *this;
}

SymPoly operator*(const SymPoly& x, const SymPoly& y) {
  SymPoly out;
  for (const auto& a : x.monos_) {
    for (const auto& b : y.monos_) out.toggle(a * b);
  }
  return out;
}

std::vector<SymMonomial> SymPoly::sorted() const {
  std::vector<SymMonomial> v(monos_.begin(), monos_.end());
  std::sort(v.begin(), v.end(), [](const SymMonomial& x, const SymMonomial& y) {
    const auto dx = x.total_degree();
    const auto dy = y.total_degree();
    if (dx != dy) return dx < dy;
    return x.exps > y.exps;
  });
  return v;
}

std::uint32_t SymPoly::degree_in(int var) const {
  check_var(var);
  std::uint32_t d = 0;
  for (const auto& m : monos_) d = std::max(d, m.exponent(var));
  return d;
}

SymPoly sym_mul(const SymPoly& p, const SymPoly& q) { return p * q; }

SymPoly sym_pow(const SymPoly& p, std::uint64_t n) {
  SymPoly result = SymPoly::one();
  SymPoly base = p;
  while (n != 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

SymPoly sym_substitute(const SymPoly& p, int var, int value) {
  check_var(var);
  SymPoly out;
  for (const auto& m : p.monomials()) {
    if (m.exponent(var) == 0) {
      out.toggle(m);
    } else if (value == 1) {
      SymMonomial n = m;
      n.exps[var - 1] = 0;
      out.toggle(n);
    }
  }
  return out;
}

SymPoly sym_substitute(const SymPoly& p, const std::map<int, int>& pins) {
  SymPoly out = p;
  for (const auto& [var, value] : pins) out = sym_substitute(out, var, value);
  return out;
}

GFElem sym_eval(const SymPoly& p, const FieldCtx& ctx, const std::map<int, GFElem>& assignment) {
  std::array<const GFElem*, kMaxSymVars> values{};
  for (const auto& [var, value] : assignment) {
    check_var(var);
    values[var - 1] = &value;
  }
  GFElem acc = kZero;
  for (const auto& m : p.monomials()) {
    GFElem term = kOne;
    for (int i = 0; i < kMaxSymVars; ++i) {
      if (m.exps[i] == 0) continue;
      if (values[i] == nullptr) {
        throw Error(ErrorCode::kUnboundVariable,
                    std::string("no value for variable '") + var_letter(i + 1) + "'");
      }
      term = ctx.mul(term, ctx.pow(*values[i], m.exps[i]));
    }
    acc += term;
  }
  return acc;
}

std::vector<SymPoly> coefficients_in(const SymPoly& p, int var) {
  std::vector<SymPoly> out(static_cast<std::size_t>(p.degree_in(var)) + 1);
  for (const auto& m : p.monomials()) {
    SymMonomial rest = m;
    rest.exps[var - 1] = 0;
    out[m.exponent(var)].toggle(rest);
  }
  return out;
}

SymDivMod sym_divmod_in_var(const SymPoly& p, const SymPoly& d, int var) {
  check_var(var);
  if (d.is_zero()) throw Error(ErrorCode::kNonMonicDivisor, "division by zero polynomial");
  const std::uint32_t dd = d.degree_in(var);
  if (coefficients_in(d, var).back() != SymPoly::one()) {
    throw Error(ErrorCode::kNonMonicDivisor,
                std::string("divisor is not monic in '") + var_letter(var) + "'");
  }
  SymDivMod out{SymPoly::zero(), p};
  while (!out.remainder.is_zero()) {
    const std::uint32_t dr = out.remainder.degree_in(var);
    if (dr < dd) break;
    const SymPoly lead = coefficients_in(out.remainder, var)[dr];
    const SymPoly term = lead * SymPoly::var(var, dr - dd);
    out.quotient += term;
    out.remainder += term * d;
  }
  return out;
}

std::string to_string(const SymMonomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 1; i <= kMaxSymVars; ++i) {
    const auto e = m.exponent(i);
    if (e == 0) continue;
    out += var_letter(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& m : p.sorted()) {
    if (!out.empty()) out += '+';
    out += to_string(m);
  }
  return out;
}

namespace {

class SymParser {
 public:
  explicit SymParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  SymPoly parse() {
    if (src_.empty()) fail("empty expression");
    SymPoly p = expr();
    if (pos_ != src_.size()) fail("unexpected token '" + rest() + "'");
    return p;
  }

 private:
  SymPoly expr() {
    SymPoly acc = product();
    while (peek() == '+') {
      ++pos_;
      acc += product();
    }
    return acc;
  }

  SymPoly product() {
    SymPoly acc = power();
    while (true) {
      const char ch = peek();
      if (ch == '*') {
        ++pos_;
        acc = acc * power();
      } else if (ch == '(' || std::isalnum(static_cast<unsigned char>(ch))) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  SymPoly power() {
    SymPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      return sym_pow(base, number());
    }
    return base;
  }

  SymPoly atom() {
    const char ch = peek();
    if (ch == '(') {
      ++pos_;
      SymPoly inner = expr();
      if (peek() != ')') fail("expected ')' at '" + rest() + "'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      return number() % 2 == 1 ? SymPoly::one() : SymPoly::zero();
    }
    if (std::islower(static_cast<unsigned char>(ch))) {
      ++pos_;
      return SymPoly::var(var_index(ch));
    }
    fail("unexpected token '" + rest() + "'");
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number at '" + rest() + "'");
    std::uint64_t v = 0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (res.ec != std::errc()) fail("number out of range");
    return v;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  std::string rest() const { return pos_ < src_.size() ? src_.substr(pos_) : "<end>"; }
  [[noreturn]] void fail(const std::string& msg) const { throw Error(ErrorCode::kParseError, msg); }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

SymPoly parse_sympoly(std::string_view text) { return SymParser(text).parse(); }

}  // namespace permpoly
