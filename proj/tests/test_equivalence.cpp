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
#include "random_support.hpp"
#include "permpoly/equivalence.hpp"
#include "permpoly/error.hpp"
#include "permpoly/perm_test.hpp"
#include "permpoly/polynomial.hpp"

namespace permpoly {
namespace {

using testing_support::random_elem;
using testing_support::random_poly;
using testing_support::random_transform;

bool oracle_pp(const FieldPoly& f) {
  return oracle::is_permutation(testing_support::raw_coeffs(f), f.field().modulus(),
                                f.field().degree());
}

// Direct pointwise definition of the transform. Frobenius acts on the
// coefficients, so as a function it is x -> h(x^(2^-k))^(2^k).
GFElem transformed_value(const FieldPoly& f, const Transform& tr, GFElem x) {
  const FieldCtx& ctx = f.field();
  const GFElem y = ctx.frobenius(x, (ctx.degree() - tr.frob) % ctx.degree());
  const GFElem inner = poly_eval(f, ctx.mul(tr.b, y) + tr.c);
  return ctx.frobenius(ctx.mul(tr.a, inner) + tr.d, tr.frob);
}

TEST(ApplyTransform, MatchesPointwiseDefinition) {
  std::mt19937_64 rng(71);
  for (int t : {3, 4, 5}) {
    const FieldCtx ctx = FieldCtx::create(t);
    for (int i = 0; i < 30; ++i) {
      const FieldPoly f = random_poly(rng, ctx, 6 + i % 2);
      const Transform tr = random_transform(rng, ctx);
      const FieldPoly g = apply_transform(f, tr);
      EXPECT_EQ(g.degree(), f.degree());
      for (GFElem x : ctx.elements()) ASSERT_EQ(poly_eval(g, x), transformed_value(f, tr, x));
    }
  }
}

TEST(ApplyTransform, IdentityAndInverse) {
  std::mt19937_64 rng(73);
  const FieldCtx ctx = FieldCtx::create(5);
  for (int i = 0; i < 40; ++i) {
    const FieldPoly f = random_poly(rng, ctx, 7);
    EXPECT_EQ(apply_transform(f, Transform::identity()), f);
    const Transform tr = random_transform(rng, ctx);
    EXPECT_EQ(apply_transform(apply_transform(f, tr), inverse(ctx, tr)), f);
  }
}

TEST(ApplyTransform, ShiftExample) {
  // x^6 with x -> x + 1 over any GF(2^t): (x+1)^6 = x^6 + x^4 + x^2 + 1.
  const FieldCtx ctx = FieldCtx::create(4);
  Transform tr;
  tr.c = kOne;
  EXPECT_EQ(apply_transform(parse_poly(ctx, "x^6"), tr), parse_poly(ctx, "x^6+x^4+x^2+1"));
}

TEST(Normalize, ShapeAndWitness) {
  std::mt19937_64 rng(79);
  for (int t : {3, 4, 5, 6}) {
    const FieldCtx ctx = FieldCtx::create(t);
    for (int i = 0; i < 60; ++i) {
      const int deg = 6 + i % 2;
      const FieldPoly f = random_poly(rng, ctx, deg);
      const NormalizedPoly n = normalize_with_witness(f);
      EXPECT_EQ(apply_transform(f, n.witness), n.poly);
      const FieldPoly& g = n.poly;
      EXPECT_EQ(g.degree(), deg);
      EXPECT_EQ(g.leading(), kOne);
      EXPECT_EQ(g.coeff(0), kZero);
      EXPECT_EQ(n.witness.frob, 0);
      if (deg == 7) {
        EXPECT_EQ(g.coeff(6), kZero);
        EXPECT_TRUE(g.coeff(5) == kZero || g.coeff(5) == kOne);
      } else {
        EXPECT_TRUE(g.coeff(5) == kZero || g.coeff(5) == kOne);
        if (g.coeff(5) == kOne) {
          EXPECT_TRUE(g.coeff(4) == kZero || g.coeff(4) == ctx.trace_one());
        }
      }
      EXPECT_EQ(normalize_shape(g), g);
    }
  }
  const FieldCtx ctx = FieldCtx::create(4);
  EXPECT_THROW(normalize_with_witness(parse_poly(ctx, "x^5+x")), Error);
}

TEST(ShapeKeyTest, RoundTrip) {
  std::mt19937_64 rng(83);
  const FieldCtx ctx = FieldCtx::create(5);
  for (int i = 0; i < 20; ++i) {
    const FieldPoly f = normalize_shape(random_poly(rng, ctx, 6 + i % 2));
    EXPECT_EQ(from_shape_key(ctx, f.degree(), shape_key(f)), f);
  }
}

TEST(OrbitImages, CountAndMembership) {
  const FieldCtx ctx = FieldCtx::create(3);
  const FieldPoly f = parse_poly(ctx, "x^7+x^5+x");
  std::size_t count = 0;
  bool saw_self = false;
  for_each_orbit_image(f, [&](const ShapeKey& k) {
    ++count;
    saw_self = saw_self || k == shape_key(f);
  });
  EXPECT_EQ(count, 8U * 7U * 3U);
  EXPECT_TRUE(saw_self);
}

TEST(CanonicalForm, InvariantOnOrbits) {
  std::mt19937_64 rng(89);
  for (int t : {3, 4, 5}) {
    const FieldCtx ctx = FieldCtx::create(t);
    for (int i = 0; i < 40; ++i) {
      const FieldPoly f = random_poly(rng, ctx, 6 + i % 2);
      const FieldPoly g = apply_transform(f, random_transform(rng, ctx));
      const FieldPoly cf = canonical_form(f);
      EXPECT_EQ(canonical_form(g), cf);
      EXPECT_EQ(canonical_form(cf), cf);
    }
  }
}

TEST(CanonicalForm, SeparatesKnownClasses) {
  const FieldCtx ctx = FieldCtx::create(4);
  EXPECT_NE(canonical_form(parse_poly(ctx, "x^7")), canonical_form(parse_poly(ctx, "x^7+x^5+x")));
  EXPECT_EQ(canonical_form(parse_poly(ctx, "x^7+x^4+x")),
            canonical_form(parse_poly(ctx, "x^7+a^3*x^4+a^6*x")));
}

TEST(CanonicalForm, Errors) {
  const FieldCtx ctx = FieldCtx::create(2);
  EXPECT_THROW(canonical_form(parse_poly(ctx, "x^6")), Error);
  const FieldCtx ctx3 = FieldCtx::create(3);
  EXPECT_THROW(canonical_form(parse_poly(ctx3, "x^5")), Error);
}

TEST(Equivalence, PreservesPermutationProperty) {
  std::mt19937_64 rng(97);
  for (int t : {3, 4, 5}) {
    const FieldCtx ctx = FieldCtx::create(t);
    for (int i = 0; i < 60; ++i) {
      const FieldPoly f = random_poly(rng, ctx, 6 + i % 2);
      const FieldPoly g = apply_transform(f, random_transform(rng, ctx));
      EXPECT_EQ(oracle_pp(f), oracle_pp(g));
    }
    if (t == 3) continue;  // no degree-7 PPs over GF(8)
    const FieldPoly pp = parse_poly(ctx, "x^7+x^5+x");
    ASSERT_TRUE(is_pp_exhaustive(pp).is_pp);
    for (int i = 0; i < 20; ++i) {
      EXPECT_TRUE(is_pp_exhaustive(apply_transform(pp, random_transform(rng, ctx))).is_pp);
    }
  }
}

}  // namespace
}  // namespace permpoly
