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

#include "permpoly/polynomial.hpp"

#include <cctype>
#include <charconv>

#include "permpoly/error.hpp"

namespace permpoly {

FieldPoly::FieldPoly(FieldCtx ctx, std::vector<GFElem> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  trim();
}

FieldPoly FieldPoly::monomial(const FieldCtx& ctx, int k, GFElem coeff) {
  std::vector<GFElem> c(static_cast<std::size_t>(k) + 1, kZero);
  c[k] = coeff;
  return FieldPoly(ctx, std::move(c));
}

FieldPoly FieldPoly::with_coeff(int k, GFElem value) const {
  std::vector<GFElem> c = coeffs_;
  if (k >= static_cast<int>(c.size())) c.resize(static_cast<std::size_t>(k) + 1, kZero);
  c[k] = value;
  return FieldPoly(ctx_, std::move(c));
}

void FieldPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldPoly operator+(const FieldPoly& f, const FieldPoly& g) {
  std::vector<GFElem> c(std::max(f.coeffs_.size(), g.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) c[i] += f.coeffs_[i];
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) c[i] += g.coeffs_[i];
  return FieldPoly(f.ctx_, std::move(c));
}

FieldPoly operator*(const FieldPoly& f, const FieldPoly& g) {
  if (f.is_zero() || g.is_zero()) return FieldPoly(f.ctx_);
  std::vector<GFElem> c(f.coeffs_.size() + g.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      c[i + j] += f.ctx_.mul(f.coeffs_[i], g.coeffs_[j]);
    }
  }
  return FieldPoly(f.ctx_, std::move(c));
}

FieldPoly FieldPoly::scaled(GFElem s) const {
  std::vector<GFElem> c = coeffs_;
  for (GFElem& x : c) x = ctx_.mul(x, s);
  return FieldPoly(ctx_, std::move(c));
}

GFElem poly_eval(const FieldPoly& f, GFElem x) {
  const FieldCtx& ctx = f.field();
  GFElem acc = kZero;
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = ctx.mul(acc, x) + c[i];
  return acc;
}

FieldPoly compose_affine(const FieldPoly& f, GFElem a, GFElem b, GFElem c, GFElem d) {
  const FieldCtx& ctx = f.field();
  const FieldPoly inner(ctx, {c, b});
  FieldPoly acc(ctx);
  const auto co = f.coeffs();
  for (std::size_t i = co.size(); i-- > 0;) acc = acc * inner + FieldPoly(ctx, {co[i]});
  return acc.scaled(a) + FieldPoly(ctx, {d});
}

FieldPoly frobenius_map(const FieldPoly& f, int power) {
  std::vector<GFElem> c(f.coeffs().begin(), f.coeffs().end());
  for (GFElem& x : c) x = f.field().frobenius(x, power);
  return FieldPoly(f.field(), std::move(c));
}

ReducedPoly reduce_mod_xq(const FieldPoly& f) {
  const std::uint64_t q = f.field().order();
  ReducedPoly out(q, kZero);
  const auto c = f.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    const std::uint64_t r = e == 0 ? 0 : ((e - 1) % (q - 1)) + 1;
    out[r] += c[e];
  }
  return out;
}

ReducedPoly reduced_mul(const FieldCtx& ctx, const ReducedPoly& a, const ReducedPoly& b) {
  const std::size_t q = ctx.order();
  std::vector<std::size_t> nz;
  nz.reserve(q);
  for (std::size_t j = 0; j < q; ++j) {
    if (!b[j].is_zero()) nz.push_back(j);
  }
  ReducedPoly out(q, kZero);
  for (std::size_t i = 0; i < q; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j : nz) {
      std::size_t e = i + j;
      if (e >= q) e -= q - 1;
      out[e] += ctx.mul(a[i], b[j]);
    }
  }
  return out;
}

ReducedPoly reduced_pow(const FieldPoly& f, std::uint64_t n) {
  const FieldCtx& ctx = f.field();
  ReducedPoly result(ctx.order(), kZero);
  result[0] = kOne;
  ReducedPoly base = reduce_mod_xq(f);
  while (n != 0) {
    if (n & 1) result = reduced_mul(ctx, result, base);
    n >>= 1;
    if (n != 0) base = reduced_mul(ctx, base, base);
  }
  return result;
}

GFElem powmod_coefficient(const FieldPoly& f, std::uint64_t n, std::uint64_t k) {
  if (k >= f.field().order()) {
    throw Error(ErrorCode::kExponentOutOfRange,
                "x^" + std::to_string(k) + " is not a reduced exponent for q = " +
                    std::to_string(f.field().order()));
  }
  return reduced_pow(f, n)[k];
}

OddPowerLadder::OddPowerLadder(const FieldPoly& f)
    : ctx_(f.field()), current_(reduce_mod_xq(f)) {
  square_ = reduced_mul(ctx_, current_, current_);
}

void OddPowerLadder::advance() {
  current_ = reduced_mul(ctx_, current_, square_);
  n_ += 2;
}

std::size_t count_roots(const FieldPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "root count of the zero polynomial");
  std::size_t roots = 0;
  for (std::uint32_t x = 0; x < f.field().order(); ++x) {
    if (poly_eval(f, GFElem(x)).is_zero()) ++roots;
  }
  return roots;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(const FieldCtx& ctx, std::string_view text) : ctx_(ctx) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  FieldPoly parse() {
    if (src_.empty()) fail("empty polynomial literal");
    std::vector<GFElem> coeffs;
    while (true) {
      auto [coeff, exp] = term();
      if (exp >= coeffs.size()) coeffs.resize(exp + 1, kZero);
      coeffs[exp] += coeff;
      if (pos_ == src_.size()) break;
      if (src_[pos_] != '+') fail("unexpected token '" + rest() + "'");
      ++pos_;
    }
    return FieldPoly(ctx_, std::move(coeffs));
  }

 private:
  std::pair<GFElem, std::size_t> term() {
    GFElem coeff = kOne;
    bool have_coeff = false;
    if (peek() != 'x') {
      coeff = coefficient();
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'x') fail("expected 'x' after '*' at '" + rest() + "'");
      }
    }
    if (peek() == 'x') {
      ++pos_;
      std::size_t exp = 1;
      if (peek() == '^') {
        ++pos_;
        exp = number();
      }
      return {coeff, exp};
    }
    if (!have_coeff) fail("expected a term at '" + rest() + "'");
    return {coeff, 0};
  }

  GFElem coefficient() {
    const char ch = peek();
    if (ch == 'a') {
      ++pos_;
      std::uint64_t k = 1;
      if (peek() == '^') {
        ++pos_;
        k = number();
      }
      return ctx_.exp(k);
    }
    if (ch == '0' && pos_ + 2 < src_.size() && src_[pos_ + 1] == 'x' &&
        std::isxdigit(static_cast<unsigned char>(src_[pos_ + 2]))) {
      pos_ += 2;
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isxdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::uint64_t v = 0;
      const auto* first = src_.data() + start;
      const auto* last = src_.data() + pos_;
      const auto res = std::from_chars(first, last, v, 16);
      if (res.ec != std::errc() || v >= ctx_.order()) {
        fail("coefficient '0x" + std::string(first, last) + "' is not a field element");
      }
      return GFElem(static_cast<std::uint32_t>(v));
    }
    if (ch == '0' || ch == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("bad coefficient at '" + rest() + "'");
      return ch == '0' ? kZero : kOne;
    }
    fail("unexpected token '" + rest() + "'");
  }

  std::size_t number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent at '" + rest() + "'");
    std::size_t v = 0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (res.ec != std::errc() || v > (std::size_t{1} << 20)) {
      fail("exponent '" + src_.substr(start, pos_ - start) + "' out of range");
    }
    return v;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  std::string rest() const { return pos_ < src_.size() ? src_.substr(pos_) : "<end>"; }

  [[noreturn]] void fail(const std::string& msg) const { throw Error(ErrorCode::kParseError, msg); }

  const FieldCtx& ctx_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldPoly parse_poly(const FieldCtx& ctx, std::string_view text) {
  return LiteralParser(ctx, text).parse();
}

std::string to_string(const FieldPoly& f) {
  if (f.is_zero()) return "0";
  const FieldCtx& ctx = f.field();
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const GFElem c = f.coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += ctx.display(c);
      continue;
    }
    if (c != kOne) out += ctx.display(c) + "*";
    out += k == 1 ? std::string("x") : "x^" + std::to_string(k);
  }
  return out;
}

}  // namespace permpoly
