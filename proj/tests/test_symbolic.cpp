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

#include "permpoly/digitcomb.hpp"
#include "permpoly/error.hpp"
#include "permpoly/fixtures.hpp"
#include "permpoly/hermite_symbolic.hpp"
#include "permpoly/polynomial.hpp"
#include "permpoly/symbolic.hpp"

namespace permpoly {
namespace {

SymPoly random_sym(std::mt19937_64& rng, int vars, int terms) {
  SymPoly p;
  for (int i = 0; i < terms; ++i) {
    SymMonomial m;
    for (int v = 1; v <= vars; ++v) m.exps[v - 1] = static_cast<std::uint32_t>(rng() % 4);
    p.toggle(m);
  }
  return p;
}

TEST(SymMul, Examples) {
  EXPECT_EQ(sym_mul(parse_sympoly("c+1"), parse_sympoly("c+1")), parse_sympoly("c^2+1"));
  EXPECT_EQ(sym_mul(parse_sympoly("b+c"), parse_sympoly("b+c")), parse_sympoly("b^2+c^2"));
}

TEST(SymPolyRing, Axioms) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    const SymPoly x = random_sym(rng, 4, 6);
    const SymPoly y = random_sym(rng, 4, 6);
    const SymPoly z = random_sym(rng, 4, 6);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_TRUE((x + x).is_zero());
    EXPECT_EQ(x * SymPoly::one(), x);
  }
}

TEST(SymSubstitute, Examples) {
  EXPECT_EQ(sym_substitute(parse_sympoly("a^3b^4+a^5c^2"), 1, 1), parse_sympoly("b^4+c^2"));
  EXPECT_EQ(sym_substitute(parse_sympoly("e^4+d^5"), 4, 0), parse_sympoly("e^4"));
  EXPECT_TRUE(sym_substitute(parse_sympoly("ab"), 1, 0).is_zero());
  EXPECT_TRUE(sym_substitute(parse_sympoly("ab+b"), 1, 1).is_zero());
}

TEST(SymEval, Examples) {
  const FieldCtx ctx = FieldCtx::create(9);
  const SymPoly e1 = parse_sympoly(fixtures::hermite_fixture("E1").printed);
  const std::map<int, GFElem> zeros = {{2, kZero}, {3, kZero}, {4, kZero}, {5, kZero}};
  EXPECT_EQ(sym_eval(e1, ctx, zeros), kZero);
  EXPECT_EQ(sym_eval(SymPoly::one(), ctx, {}), kOne);
  try {
    sym_eval(parse_sympoly("b+c"), ctx, {{2, kOne}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnboundVariable);
  }
}

TEST(SymDivmod, Examples) {
  std::mt19937_64 rng(59);
  const SymPoly p = parse_sympoly("e^3+be^2+c");
  const SymDivMod self = sym_divmod_in_var(p, p, 5);
  EXPECT_EQ(self.quotient, SymPoly::one());
  EXPECT_TRUE(self.remainder.is_zero());
  const SymDivMod s = sym_divmod_in_var(parse_sympoly("e^2+c"), parse_sympoly("e+1"), 5);
  EXPECT_EQ(s.quotient, parse_sympoly("e+1"));
  EXPECT_EQ(s.remainder, parse_sympoly("c+1"));
  try {
    sym_divmod_in_var(p, parse_sympoly("ce+1"), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMonicDivisor);
  }
}

TEST(SymDivmod, RoundTrip) {
  using namespace fixtures;
  const std::vector<std::pair<SymPoly, SymPoly>> cases = {
      {e7(), e6()}, {e6(), e9()}, {e5(), e4_expanded()}, {e7(), e9()}};
  for (const auto& [p, d] : cases) {
    const SymDivMod r = sym_divmod_in_var(p, d, 5);
    EXPECT_EQ(r.quotient * d + r.remainder, p);
    EXPECT_LT(r.remainder.degree_in(5), d.degree_in(5));
  }
}

TEST(SymText, PrintAndParse) {
  const SymPoly p = parse_sympoly("b^4(1+c)+(c^2+b^2c+e)+(e^2+cd^2+c^2e)");
  EXPECT_EQ(to_string(p), "e+c^2+e^2+b^2c+c^2e+cd^2+b^4+b^4c");
  EXPECT_EQ(parse_sympoly(to_string(p)), p);
  EXPECT_EQ(to_string(SymPoly::zero()), "0");
  EXPECT_EQ(to_string(SymPoly::one()), "1");
  EXPECT_EQ(parse_sympoly("(b+1)^2 + 3b"), parse_sympoly("b^2+1+b"));
  EXPECT_THROW(parse_sympoly("b^2+"), Error);
  EXPECT_THROW(parse_sympoly("b$"), Error);
}

TEST(HermiteSymbolic, Examples) {
  EXPECT_EQ(hermite_symbolic(6, 2, 85, 2, {{1, 1}}),
            parse_sympoly("b^4(1+c)+(c^2+b^2c+e)+(e^2+cd^2+c^2e)"));
  for (std::uint64_t m : {2U, 9U, 36U, 146U}) {
    EXPECT_EQ(hermite_symbolic(7, 1, m, 0), SymPoly::one()) << m;
  }
  EXPECT_EQ(hermite_symbolic(7, 2, 146, 19, {{1, 0}}), parse_sympoly("d^33"));
}

TEST(HermiteSymbolic, Errors) {
  try {
    hermite_symbolic(6, 2, 85, 0, {});  // tot = -1
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidOffset);
  }
  try {
    hermite_symbolic(6, 4, 10, 13, {});  // 6 * 23 >= 2 * 63
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrapOverlap);
  }
}

TEST(HermiteSymbolic, FixturesReproduced) {
  for (const auto& f : fixtures::hermite_fixtures()) {
    const SymPoly got = hermite_symbolic_for_field(f.deg, f.t, f.u, f.pins);
    const SymPoly want = parse_sympoly(f.corrected.value_or(f.printed));
    EXPECT_EQ(got, want) << f.name << "\n got:  " << to_string(got);
    EXPECT_TRUE(hermite_symbolic_stable(f.deg, f.t, f.u, f.pins)) << f.name;
  }
}

TEST(HermiteSymbolic, PrintedErrataDifferByTheirCorrection) {
  // G13: one b^2 f^3 that should read b^4 f^3, times (d^16+c^16b^8+b^16d^8).
  const auto& g13 = fixtures::hermite_fixture("G13");
  const SymPoly g13_diff = parse_sympoly(g13.printed) + parse_sympoly(*g13.corrected);
  EXPECT_EQ(g13_diff, parse_sympoly("(b^2+b^4)f^3(d^16+c^16b^8+b^16d^8)"));
  // H15: f^32 that should read f^16.
  const auto& h15 = fixtures::hermite_fixture("H15");
  const SymPoly h15_diff = parse_sympoly(h15.printed) + parse_sympoly(*h15.corrected);
  EXPECT_EQ(h15_diff, parse_sympoly("(f^32+f^16)(c^2+b^3+f)"));
}

TEST(HermiteSymbolic, AgreesWithPowmodOracle) {
  std::mt19937_64 rng(61);
  struct Case {
    int deg, t;
    std::uint64_t u;
  };
  for (const Case c : {Case{6, 8, 5}, Case{6, 9, 2}, Case{7, 8, 3}, Case{7, 10, 11}}) {
    const FieldCtx ctx = FieldCtx::create(c.t);
    const WrapParams wp = wrap_params(c.deg, c.t);
    const SymPoly sp = hermite_symbolic(c.deg, wp.r, wp.m, c.u);
    for (int i = 0; i < 10; ++i) {
      std::vector<GFElem> co(c.deg + 1, kZero);
      co[c.deg] = kOne;
      std::map<int, GFElem> asg;
      for (int v = 1; v < c.deg; ++v) {
        const GFElem x(static_cast<std::uint32_t>(rng() % ctx.order()));
        asg[v] = x;
        co[c.deg - v] = x;
      }
      const FieldPoly f(ctx, co);
      EXPECT_EQ(sym_eval(sp, ctx, asg), powmod_coefficient(f, wp.m + c.u, ctx.order() - 1))
          << c.deg << " t=" << c.t << " u=" << c.u;
    }
  }
}

TEST(ProofFixtures, GammaFormAndFactorization) {
  using namespace fixtures;
  EXPECT_EQ(e4_expanded(), e4_gamma_form());
  EXPECT_EQ(e5(), parse_sympoly("c+1") * e4_expanded() * e6());
  EXPECT_EQ(e10(), parse_sympoly("c^8(c+1)^8") * e9());
  EXPECT_EQ(sym_divmod_in_var(e7(), e6(), 5).remainder, e10());
}

}  // namespace
}  // namespace permpoly
