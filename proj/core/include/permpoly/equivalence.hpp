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

#include <functional>
#include <optional>

#include "permpoly/polynomial.hpp"

namespace permpoly {

// f -> psi^frob(a * f(b x + c) + d), with a, b nonzero.
struct Transform {
  GFElem a = kOne;
  GFElem b = kOne;
  GFElem c = kZero;
  GFElem d = kZero;
  int frob = 0;

  static Transform identity() { return {}; }
  friend bool operator==(const Transform&, const Transform&) = default;
};

FieldPoly apply_transform(const FieldPoly& f, const Transform& tr);

// The transform undoing `tr` on the same field.
Transform inverse(const FieldCtx& ctx, const Transform& tr);

struct NormalizedPoly {
  FieldPoly poly;
  // apply_transform(input, witness) == poly.
  Transform witness;
};

// Reduced shapes:
//  degree 7: monic, f(0) = 0, x^6 coefficient 0, x^5 coefficient in {0, 1};
//  degree 6: monic, f(0) = 0, x^5 coefficient in {0, 1}, and when it is 1 the
//            x^4 coefficient is 0 or mu (the field's trace_one element).
// Throws UnsupportedShape for other degrees.
NormalizedPoly normalize_with_witness(const FieldPoly& f);
FieldPoly normalize_shape(const FieldPoly& f);

// Coefficients x^(deg-1) .. x^1 of a monic, zero-constant polynomial of
// degree deg, compared lexicographically by raw bit mask.
using ShapeKey = std::array<std::uint32_t, 6>;
ShapeKey shape_key(const FieldPoly& f);
FieldPoly from_shape_key(const FieldCtx& ctx, int deg, const ShapeKey& key);

// Calls `visit` once per (b, c, frob) with b != 0: the image
// psi^frob(b^-deg * f(b x + c)) with its constant term removed. f must be
// monic with zero constant term. q (q - 1) t images in total.
void for_each_orbit_image(const FieldPoly& f,
                          const std::function<void(const ShapeKey&)>& visit);

// Least orbit image in ShapeKey order; equal for all polynomials equivalent
// under affine maps and Frobenius. Throws UnsupportedShape unless the
// degree is 6 or 7, and DegreeTooLarge when the degree is >= q.
FieldPoly canonical_form(const FieldPoly& f);

}  // namespace permpoly
