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

#include "permpoly/gf2t.hpp"

#include <array>
#include <bit>

#include "permpoly/error.hpp"

namespace permpoly {

namespace gf2x {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t r = 0;
  a = mod(a, m);
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a = mod(a << 1, m);
  }
  return r;
}

bool is_irreducible(std::uint64_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  // Trial division by every polynomial of degree 1..d/2.
  for (int k = 1; 2 * k <= d; ++k) {
    for (std::uint64_t g = std::uint64_t{1} << k; g < (std::uint64_t{2} << k); ++g) {
      if (mod(p, g) == 0) return false;
    }
  }
  return true;
}

}  // namespace gf2x

namespace {

// Primitive polynomials used when the smallest irreducible of degree t does
// not have a primitive root.
constexpr std::array<std::uint32_t, kMaxExtensionDegree + 1> kPrimitiveFallback = {
    0,       0,       0x7,     0xB,     0x13,    0x25,    0x43,   0x83,   0x11D,
    0x211,   0x409,   0x805,   0x1053,  0x201B,  0x4443,  0x8003, 0x1100B,
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t powmod_poly(std::uint64_t g, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = gf2x::mulmod(r, g, m);
    g = gf2x::mulmod(g, g, m);
    e >>= 1;
  }
  return r;
}

bool is_primitive_element(std::uint64_t g, std::uint64_t modulus, std::uint64_t group_order) {
  if (g == 0) return false;
  if (powmod_poly(g, group_order, modulus) != 1) return false;
  for (std::uint64_t p : prime_factors(group_order)) {
    if (powmod_poly(g, group_order / p, modulus) == 1) return false;
  }
  return true;
}

void check_degree(int t) {
  if (t < kMinExtensionDegree || t > kMaxExtensionDegree) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "extension degree " + std::to_string(t) + " outside [2, 16]");
  }
}

}  // namespace

std::uint32_t FieldCtx::default_modulus(int t) {
  check_degree(t);
  const std::uint64_t group_order = (std::uint64_t{1} << t) - 1;
  for (std::uint64_t p = (std::uint64_t{1} << t) | 1; p < (std::uint64_t{2} << t); p += 2) {
    if (!gf2x::is_irreducible(p)) continue;
    if (is_primitive_element(2, p, group_order)) return static_cast<std::uint32_t>(p);
    break;
  }
  return kPrimitiveFallback[t];
}

FieldCtx FieldCtx::create(int t, std::optional<std::uint32_t> modulus) {
  check_degree(t);
  const std::uint32_t m = modulus.value_or(default_modulus(t));
  if (gf2x::degree(m) != t) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "modulus degree " + std::to_string(gf2x::degree(m)) + " does not match t = " +
                    std::to_string(t));
  }
  if (!gf2x::is_irreducible(m)) {
    throw Error(ErrorCode::kModulusNotIrreducible, "modulus is reducible over F_2");
  }

  auto tb = std::make_shared<Tables>();
  tb->t = t;
  tb->q = std::uint32_t{1} << t;
  tb->modulus = m;
  const std::uint32_t group_order = tb->q - 1;

  std::uint32_t g = 2;
  while (!is_primitive_element(g, m, group_order)) ++g;
  tb->generator = GFElem(g);

  tb->log.assign(tb->q, 0);
  tb->antilog.assign(2 * static_cast<std::size_t>(group_order), 0);
  std::uint64_t cur = 1;
  for (std::uint32_t i = 0; i < group_order; ++i) {
    tb->antilog[i] = static_cast<std::uint32_t>(cur);
    tb->antilog[i + group_order] = static_cast<std::uint32_t>(cur);
    tb->log[cur] = i;
    cur = gf2x::mulmod(cur, g, m);
  }

  FieldCtx ctx(tb);
  for (std::uint32_t x = 1; x < tb->q; ++x) {
    if (ctx.trace(GFElem(x)) == 1) {
      tb->trace_one = GFElem(x);
      break;
    }
  }
  return ctx;
}

GFElem FieldCtx::pow(GFElem x, std::uint64_t n) const {
  if (n == 0) return kOne;
  if (x.is_zero()) return kZero;
  const std::uint64_t ord = order() - 1;
  return GFElem(tables_->antilog[(tables_->log[x.bits] * (n % ord)) % ord]);
}

GFElem FieldCtx::inv(GFElem x) const {
  if (x.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint32_t ord = order() - 1;
  const std::uint32_t l = tables_->log[x.bits];
  return GFElem(tables_->antilog[l == 0 ? 0 : ord - l]);
}

GFElem FieldCtx::frobenius(GFElem x, int k) const {
  if (x.is_zero()) return x;
  const int t = degree();
  k %= t;
  if (k < 0) k += t;
  const std::uint64_t ord = order() - 1;
  const std::uint64_t e = (std::uint64_t{tables_->log[x.bits]} << k) % ord;
  return GFElem(tables_->antilog[e]);
}

GFElem FieldCtx::sqrt(GFElem x) const { return frobenius(x, degree() - 1); }

int FieldCtx::trace(GFElem x) const {
  GFElem acc = x;
  GFElem cur = x;
  for (int i = 1; i < degree(); ++i) {
    cur = square(cur);
    acc += cur;
  }
  // acc is 0 or 1 in F_2.
  return static_cast<int>(acc.bits);
}

std::optional<GFElem> FieldCtx::solve_artin_schreier(GFElem b) const {
  if (trace(b) != 0) return std::nullopt;
  const int t = degree();
  if (t % 2 == 1) {
    // Half trace: sum of b^(4^i), i = 0..(t-1)/2.
    GFElem h = b;
    GFElem cur = b;
    for (int i = 1; i <= (t - 1) / 2; ++i) {
      cur = square(square(cur));
      h += cur;
    }
    return h;
  }
  // r -> r^2 + r is F_2-linear with kernel {0, 1}; reduce b against an
  // echelon basis of its image, tracking preimages.
  struct Row {
    std::uint32_t image;
    std::uint32_t pre;
  };
  std::vector<Row> basis;
  for (int i = 0; i < t; ++i) {
    const GFElem e(std::uint32_t{1} << i);
    Row row{(square(e) + e).bits, e.bits};
    for (const Row& r : basis) {
      if (row.image & (std::uint32_t{1} << gf2x::degree(r.image))) {
        row.image ^= r.image;
        row.pre ^= r.pre;
      }
    }
    if (row.image != 0) {
      // Keep the basis fully reduced so a single pass solves.
      const std::uint32_t lead = std::uint32_t{1} << gf2x::degree(row.image);
      for (Row& r : basis) {
        if (r.image & lead) {
          r.image ^= row.image;
          r.pre ^= row.pre;
        }
      }
      basis.push_back(row);
    }
  }
  std::uint32_t rem = b.bits;
  std::uint32_t sol = 0;
  for (const Row& r : basis) {
    if (rem & (std::uint32_t{1} << gf2x::degree(r.image))) {
      rem ^= r.image;
      sol ^= r.pre;
    }
  }
  if (rem != 0) return std::nullopt;
  return GFElem(sol);
}

std::uint32_t FieldCtx::log(GFElem x) const {
  if (x.is_zero()) throw Error(ErrorCode::kDivisionByZero, "discrete log of zero");
  return tables_->log[x.bits];
}

GFElem FieldCtx::exp(std::uint64_t k) const {
  return GFElem(tables_->antilog[k % (order() - 1)]);
}

std::string FieldCtx::display(GFElem x) const {
  if (x.is_zero()) return "0";
  if (x == kOne) return "1";
  return "a^" + std::to_string(log(x));
}

std::vector<GFElem> FieldCtx::elements() const {
  std::vector<GFElem> out;
  out.reserve(order());
  for (std::uint32_t x = 0; x < order(); ++x) out.emplace_back(x);
  return out;
}

}  // namespace permpoly
