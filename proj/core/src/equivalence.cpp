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

#include "permpoly/equivalence.hpp"

#include <algorithm>

#include "permpoly/error.hpp"

namespace permpoly {

FieldPoly apply_transform(const FieldPoly& f, const Transform& tr) {
  return frobenius_map(compose_affine(f, tr.a, tr.b, tr.c, tr.d), tr.frob);
}

Transform inverse(const FieldCtx& ctx, const Transform& tr) {
  const int t = ctx.degree();
  const int k = ((tr.frob % t) + t) % t;
  const GFElem ai = ctx.inv(tr.a);
  const GFElem bi = ctx.inv(tr.b);
  return Transform{
      .a = ctx.frobenius(ai, k),
      .b = ctx.frobenius(bi, k),
      .c = ctx.frobenius(ctx.mul(bi, tr.c), k),
      .d = ctx.frobenius(ctx.mul(ai, tr.d), k),
      .frob = (t - k) % t,
  };
}

namespace {

void check_shape(const FieldPoly& f) {
  if (f.degree() != 6 && f.degree() != 7) {
    throw Error(ErrorCode::kUnsupportedShape,
                "expected degree 6 or 7, got " + std::to_string(f.degree()));
  }
}

}  // namespace

NormalizedPoly normalize_with_witness(const FieldPoly& f) {
  check_shape(f);
  const FieldCtx& ctx = f.field();
  const int deg = f.degree();
  const GFElem monic_scale = ctx.inv(f.leading());
  const FieldPoly g = f.scaled(monic_scale);

  GFElem scale = kOne;  // x -> scale * x
  GFElem shift = kZero;  // then x -> x + shift, in the original coordinate
  if (deg == 7) {
    shift = g.coeff(6);
    const FieldPoly h = compose_affine(g, kOne, kOne, shift, kZero);
    if (!h.coeff(5).is_zero()) scale = ctx.sqrt(h.coeff(5));
  } else {
    const GFElem lead5 = g.coeff(5);
    if (!lead5.is_zero()) {
      scale = lead5;
      const FieldPoly h = compose_affine(g, ctx.inv(ctx.pow(scale, 6)), scale, kZero, kZero);
      const GFElem b = h.coeff(4);
      auto r = ctx.solve_artin_schreier(b);
      if (!r) r = ctx.solve_artin_schreier(b + ctx.trace_one());
      shift = ctx.mul(scale, *r);
    }
  }
  Transform w;
  w.a = ctx.mul(monic_scale, ctx.inv(ctx.pow(scale, static_cast<std::uint64_t>(deg))));
  w.b = scale;
  w.c = shift;
  w.d = ctx.mul(w.a, poly_eval(f, shift));
  return NormalizedPoly{apply_transform(f, w), w};
}

FieldPoly normalize_shape(const FieldPoly& f) { return normalize_with_witness(f).poly; }

ShapeKey shape_key(const FieldPoly& f) {
  ShapeKey key{};
  const int deg = f.degree();
  for (int k = deg - 1, i = 0; k >= 1 && i < static_cast<int>(key.size()); --k, ++i) {
    key[i] = f.coeff(k).bits;
  }
  return key;
}

FieldPoly from_shape_key(const FieldCtx& ctx, int deg, const ShapeKey& key) {
  std::vector<GFElem> c(static_cast<std::size_t>(deg) + 1, kZero);
  c[deg] = kOne;
  for (int k = deg - 1, i = 0; k >= 1; --k, ++i) c[k] = GFElem(key[i]);
  return FieldPoly(ctx, std::move(c));
}

void for_each_orbit_image(const FieldPoly& f,
                          const std::function<void(const ShapeKey&)>& visit) {
  const FieldCtx& ctx = f.field();
  const int deg = f.degree();
  const int t = ctx.degree();
  const std::uint32_t q = ctx.order();
  const std::uint32_t ord = q - 1;
  const auto log = ctx.log_table();
  const auto antilog = ctx.antilog_table();

  // Images are handled in the log domain: coefficient k of b^-deg f(bx + c)
  // is shifted_k * b^(k - deg).
  std::vector<std::int64_t> logs(static_cast<std::size_t>(deg), -1);
  ShapeKey key{};
  for (std::uint32_t c = 0; c < q; ++c) {
    const FieldPoly shifted = compose_affine(f, kOne, kOne, GFElem(c), kZero);
    for (int k = 1; k < deg; ++k) {
      const GFElem v = shifted.coeff(k);
      logs[k] = v.is_zero() ? -1 : static_cast<std::int64_t>(log[v.bits]);
    }
    for (std::uint32_t lb = 0; lb < ord; ++lb) {
      for (int fr = 0; fr < t; ++fr) {
        const std::uint64_t frob_mul = (std::uint64_t{1} << fr) % ord;
        for (int k = deg - 1, i = 0; k >= 1; --k, ++i) {
          if (logs[k] < 0) {
            key[i] = 0;
            continue;
          }
          const std::uint64_t shift_log =
              (static_cast<std::uint64_t>(logs[k]) + std::uint64_t{lb} * (ord - (deg - k) % ord)) % ord;
          key[i] = antilog[(shift_log * frob_mul) % ord];
        }
        visit(key);
      }
    }
  }
}

FieldPoly canonical_form(const FieldPoly& f) {
  check_shape(f);
  const FieldCtx& ctx = f.field();
  if (f.degree() >= static_cast<int>(ctx.order())) {
    throw Error(ErrorCode::kDegreeTooLarge, "degree must be below the field order");
  }
  const FieldPoly monic = f.scaled(ctx.inv(f.leading()));
  const FieldPoly base = monic + FieldPoly(ctx, {monic.coeff(0)});
  std::optional<ShapeKey> best;
  for_each_orbit_image(base, [&](const ShapeKey& key) {
    if (!best || key < *best) best = key;
  });
  return from_shape_key(ctx, f.degree(), *best);
}

}  // namespace permpoly
