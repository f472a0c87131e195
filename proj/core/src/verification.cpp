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

#include "permpoly/verification.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "permpoly/error.hpp"
#include "permpoly/expected_tables.hpp"
#include "permpoly/fixtures.hpp"
#include "permpoly/perm_test.hpp"

namespace permpoly {

namespace {

constexpr int kA = 1;
constexpr int kB = 2;
constexpr int kC = 3;
constexpr int kD = 4;
constexpr int kE = 5;
constexpr std::size_t kMaxListed = 5;

CheckResult check(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "; " : "") + items[i];
  return out;
}

GFElem random_elem(std::mt19937_64& rng, const FieldCtx& ctx, std::uint32_t lo = 0) {
  std::uniform_int_distribution<std::uint32_t> dist(lo, ctx.order() - 1);
  return GFElem(dist(rng));
}

// Monic with the constant term dropped.
FieldPoly monic_zero_constant(const FieldPoly& f) {
  return f.scaled(f.field().inv(f.leading())).with_coeff(0, kZero);
}

// Returns an empty string when the restriction holds.
std::string dickson_violation(const FieldPoly& f) {
  const FieldCtx& ctx = f.field();
  const GFElem a = f.coeff(5);
  const GFElem c = f.coeff(3);
  const GFElem a3 = ctx.pow(a, 3);
  if (ctx.degree() % 2 == 0) {
    if (c != a3 || c.is_zero()) return to_string(f) + " has c != a^3 or c = 0";
  } else {
    if (a.is_zero() || c.is_zero() || c == a3) {
      return to_string(f) + " violates a != 0, c != 0, c != a^3";
    }
  }
  return {};
}

// c^k * p with every d^(2j) replaced by (rest / c)^j, where E1 = c d^2 + rest.
// p must hold only even powers of d, at most 2k.
SymPoly eliminate_d(const SymPoly& p, const SymPoly& rest, std::uint32_t k) {
  std::vector<SymPoly> rest_pow{SymPoly::one()};
  SymPoly out;
  for (const auto& m : p.monomials()) {
    const std::uint32_t j = m.exponent(kD) / 2;
    while (rest_pow.size() <= j) rest_pow.push_back(rest_pow.back() * rest);
    SymMonomial base = m;
    base.exps[kD - 1] = 0;
    base.exps[kC - 1] += k - j;
    out += SymPoly(base) * rest_pow[j];
  }
  return out;
}

}  // namespace

bool SuiteResult::pass() const {
  for (const auto& c : checks) {
    if (!c.pass && !c.informational) return false;
  }
  return true;
}

std::string to_string(const SuiteResult& result) {
  std::ostringstream os;
  for (const auto& c : result.checks) {
    os << (c.informational ? "INFO " : c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << result.suite << ": " << (result.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

CheckResult check_identity(std::string name, const SymPoly& lhs, const SymPoly& rhs) {
  const SymPoly diff = lhs + rhs;
  return check(std::move(name), diff.is_zero(), diff.is_zero() ? "" : "difference " + to_string(diff));
}

SuiteResult verify_dickson_restrictions(int t, std::uint64_t seed, unsigned workers) {
  if (t < 3 || t > 7) {
    throw Error(ErrorCode::kUnsupportedDegree, "restriction check needs 3 <= t <= 7");
  }
  ClassifyOptions opts;
  opts.workers = workers;
  return verify_dickson_restrictions(classify(6, t, opts), seed);
}

SuiteResult verify_dickson_restrictions(const ClassificationReport& report, std::uint64_t seed) {
  if (report.degree != 6 || report.mode != SearchMode::kVerify) {
    throw Error(ErrorCode::kUnsupportedShape, "restriction check needs a verify-mode degree-6 report");
  }
  const int t = report.t;
  const FieldCtx ctx = FieldCtx::create(t, report.modulus);
  std::set<ShapeKey> exempt = {shape_key(canonical_form(parse_poly(ctx, "x^6")))};
  if (t == 5) exempt.insert(shape_key(canonical_form(parse_poly(ctx, "x^6+x^5+x^2"))));

  // Every PP of an exempt class lies in the orbit of that class's witness.
  std::set<ShapeKey> exempt_pps;
  for (const auto& cls : report.classes) {
    if (!exempt.contains(shape_key(cls.canonical))) continue;
    for_each_orbit_image(cls.witness, [&](const ShapeKey& img) { exempt_pps.insert(img); });
  }

  std::mt19937_64 rng(seed);
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> listed;
  for (const ShapeKey& key : report.pp_keys) {
    if (exempt_pps.contains(key)) continue;
    const FieldPoly f = from_shape_key(ctx, 6, key);
    Transform tr;
    tr.a = random_elem(rng, ctx, 1);
    tr.b = random_elem(rng, ctx, 1);
    tr.c = random_elem(rng, ctx);
    tr.d = random_elem(rng, ctx);
    tr.frob = static_cast<int>(rng() % static_cast<std::uint64_t>(t));
    const FieldPoly g = monic_zero_constant(apply_transform(f, tr));
    for (const FieldPoly* p : {&f, &g}) {
      const std::string v = dickson_violation(*p);
      if (v.empty()) continue;
      ++violations;
      if (listed.size() < kMaxListed) listed.push_back(v);
    }
    ++checked;
  }
  const std::string rule = t % 2 == 0 ? "c = a^3 != 0" : "a != 0, c != 0, c != a^3";
  std::ostringstream detail;
  detail << checked << " PPs outside the exempt classes (each also under a random transform), "
         << (report.pps_found - checked) << " exempt";
  if (violations) detail << "; " << violations << " violations: " << join(listed);
  SuiteResult out{"dickson t=" + std::to_string(t), {}};
  out.checks.push_back(check("t=" + std::to_string(t) + " " + rule, violations == 0, detail.str()));
  return out;
}

SuiteResult verify_quintic_lemma(int t) {
  if (t < 3 || t > 11 || t % 2 == 0) {
    throw Error(ErrorCode::kUnsupportedDegree, "quintic check needs odd t in [3, 11]");
  }
  const FieldCtx ctx = FieldCtx::create(t);
  std::vector<std::string> bad;
  std::size_t failures = 0;
  for (std::uint32_t cb = 2; cb < ctx.order(); ++cb) {
    const GFElem c(cb);
    std::vector<GFElem> co(6, kZero);
    co[5] = kOne;
    co[2] = c;
    co[1] = kOne;
    co[0] = ctx.square(c) + c;
    const std::size_t roots = count_roots(FieldPoly(ctx, co));
    if (roots != 1) {
      ++failures;
      if (bad.size() < kMaxListed) bad.push_back("c=" + ctx.display(c) + " roots=" + std::to_string(roots));
    }
  }
  std::string detail = std::to_string(ctx.order() - 2) + " values of c";
  if (failures) detail += "; " + std::to_string(failures) + " failures: " + join(bad);
  SuiteResult out{"quintic t=" + std::to_string(t), {}};
  out.checks.push_back(check("t=" + std::to_string(t) + " single root", failures == 0, detail));
  return out;
}

SuiteResult verify_proof_identities(std::uint64_t seed, int samples) {
  using namespace fixtures;
  SuiteResult out{"identities", {}};
  const SymPoly c1 = parse_sympoly("c+1");

  out.checks.push_back(check_identity("(i) E5 = (c+1) E4 E6", e5(), c1 * e4_expanded() * e6()));
  {
    const SymDivMod dm = sym_divmod_in_var(e7(), e6(), kE);
    out.checks.push_back(check_identity("(ii) rem(E7, E6; e) = E10", dm.remainder, e10()));
    out.checks.push_back(
        check_identity("(ii) E10 = c^8 (c+1)^8 E9", e10(), parse_sympoly("c^8(c+1)^8") * e9()));
    const bool round = dm.quotient * e6() + dm.remainder == e7();
    out.checks.push_back(check("(ii) quotient * E6 + remainder = E7", round));
  }
  out.checks.push_back(
      check_identity("(iii) E4 = e^2 + (c+1) e + gamma", e4_expanded(), e4_gamma_form()));
  {
    const SymPoly rem = sym_divmod_in_var(e6(), e9(), kE).remainder;
    const bool exact = rem == sym_pow(c1, 6);
    out.checks.push_back(check("(iv) rem(E6, E9; e) = (c+1)^6", exact, "remainder " + to_string(rem)));
  }

  const FieldCtx ctx = FieldCtx::create(13);
  std::mt19937_64 rng(seed);
  {
    // Roots of E9 in e, found by scanning the field.
    const auto e9_by_e = coefficients_in(e9(), kE);
    const SymPoly p6 = e6();
    std::uint64_t pairs = 0;
    std::uint64_t roots = 0;
    std::uint64_t mismatches = 0;
    for (int i = 0; i < samples; ++i) {
      const GFElem b = random_elem(rng, ctx);
      const GFElem c = random_elem(rng, ctx, 2);
      std::vector<GFElem> k;
      for (const auto& cp : e9_by_e) k.push_back(sym_eval(cp, ctx, {{kB, b}, {kC, c}}));
      const GFElem target = ctx.pow(c + kOne, 6);
      ++pairs;
      for (std::uint32_t eb = 0; eb < ctx.order(); ++eb) {
        const GFElem e(eb);
        GFElem acc = kZero;
        for (auto it = k.rbegin(); it != k.rend(); ++it) acc = ctx.mul(acc, e) + *it;
        if (!acc.is_zero()) continue;
        ++roots;
        if (sym_eval(p6, ctx, {{kB, b}, {kC, c}, {kE, e}}) != target) ++mismatches;
      }
    }
    std::ostringstream detail;
    detail << pairs << " (b, c) samples, " << roots << " roots of E9, " << mismatches
           << " mismatches";
    out.checks.push_back(
        check("(iv) E6 = (c+1)^6 at roots of E9 over GF(2^13)", mismatches == 0 && roots > 0,
              detail.str()));
  }
  {
    const SymPoly p1 = sym_substitute(parse_sympoly(hermite_fixture("E1").printed), kA, 1);
    const SymPoly p2 = parse_sympoly(hermite_fixture("E2").printed);
    const SymPoly p3 = parse_sympoly(hermite_fixture("E3").printed);
    const SymPoly p4 = e4_expanded();
    const SymPoly p5 = e5();
    const SymPoly p7 = e7();
    std::uint64_t bad1 = 0;
    std::uint64_t bad2 = 0;
    std::uint64_t bad3 = 0;
    std::uint64_t bad3_exact = 0;
    for (int i = 0; i < samples; ++i) {
      const GFElem b = random_elem(rng, ctx);
      const GFElem c = random_elem(rng, ctx, 1);
      const GFElem e = random_elem(rng, ctx);
      // E1 = c d^2 + (terms free of d).
      const GFElem rest = sym_eval(p1, ctx, {{kB, b}, {kC, c}, {kD, kZero}, {kE, e}});
      const GFElem d = ctx.sqrt(ctx.div(rest, c));
      const std::map<int, GFElem> pt = {{kB, b}, {kC, c}, {kD, d}, {kE, e}};
      if (!sym_eval(p1, ctx, pt).is_zero()) ++bad1;
      const GFElem lhs2 = ctx.mul(ctx.pow(c, 4), sym_eval(p2, ctx, pt));
      if (lhs2 != sym_eval(p5, ctx, pt)) ++bad2;
      const GFElem lhs3 = ctx.mul(ctx.pow(c, 23), sym_eval(p3, ctx, pt));
      const GFElem rhs3 = ctx.mul(ctx.mul(c, ctx.pow(c + kOne, 4)),
                                  ctx.mul(ctx.pow(sym_eval(p4, ctx, pt), 4),
                                          ctx.pow(sym_eval(p7, ctx, pt), 4)));
      if (lhs3 != rhs3) ++bad3;
      if (ctx.mul(c, lhs3) != rhs3) ++bad3_exact;
    }
    const std::string n = std::to_string(samples) + " points on E1 = 0";
    out.checks.push_back(check("(v) sampled points satisfy E1 = 0", bad1 == 0,
                               n + ", " + std::to_string(bad1) + " mismatches"));
    out.checks.push_back(check("(v) c^4 E2 = E5 on E1 = 0", bad2 == 0,
                               n + ", " + std::to_string(bad2) + " mismatches"));
    out.checks.push_back(check("(v) c^23 E3 = c (c+1)^4 E4^4 E7^4 on E1 = 0", bad3 == 0,
                               n + ", " + std::to_string(bad3) + " mismatches"));
    const SymPoly rest = sym_substitute(p1, kD, 0);
    CheckResult sym = check_identity("(v) d eliminated: c^28 E3 = c^5 (c+1)^4 E4^4 E7^4",
                                     eliminate_d(p3, rest, 28),
                                     parse_sympoly("c^5(c+1)^4") * sym_pow(p4, 4) * sym_pow(p7, 4));
    sym.informational = true;
    out.checks.push_back(sym);
    CheckResult exact = check("(v) c^24 E3 = c (c+1)^4 E4^4 E7^4 on E1 = 0", bad3_exact == 0,
                              n + ", " + std::to_string(bad3_exact) + " mismatches");
    exact.informational = true;
    out.checks.push_back(exact);
  }
  return out;
}

SuiteResult verify_expected_table(const ClassificationReport& report) {
  const std::string tag =
      "deg " + std::to_string(report.degree) + " t=" + std::to_string(report.t);
  SuiteResult out{"tables " + tag, {}};
  const ExpectedTable* table = find_expected_table(report.degree, report.t);
  if (table == nullptr) {
    out.checks.push_back(check(tag + " expected table present", false));
    return out;
  }
  const FieldCtx ctx = FieldCtx::create(report.t, report.modulus);

  // Listed entries pairwise inequivalent.
  const auto listed = expected_polys(*table, ctx);
  std::set<ShapeKey> listed_keys;
  for (const auto& f : listed) listed_keys.insert(shape_key(canonical_form(f)));
  out.checks.push_back(check(tag + " listed entries pairwise inequivalent",
                             listed_keys.size() == listed.size(),
                             std::to_string(listed.size()) + " entries, " +
                                 std::to_string(listed_keys.size()) + " classes"));

  // Found classes against the table; rows that are not valid polynomials must
  // be accounted for by exactly as many unlisted classes.
  std::size_t typo_rows = 0;
  std::vector<std::string> typo_text;
  for (const auto& e : table->entries) {
    if (e.typo) {
      ++typo_rows;
      typo_text.push_back(e.as_printed);
    }
  }
  const auto& diff = report.table_diff;
  std::ostringstream detail;
  detail << report.classes.size() << " classes found";
  bool pass = false;
  if (typo_rows == 0) {
    pass = diff.empty() && table->pps_exist == (report.pps_found > 0);
  } else {
    pass = diff.missing == typo_text && diff.extra.size() == typo_rows;
    for (std::size_t i = 0; i < typo_text.size() && i < diff.extra.size(); ++i) {
      detail << "; printed row " << typo_text[i] << " resolves to " << diff.extra[i];
    }
  }
  if (!pass) {
    if (!diff.missing.empty()) detail << "; missing: " << join(diff.missing);
    if (!diff.extra.empty()) detail << "; extra: " << join(diff.extra);
  }
  out.checks.push_back(check(tag + " classes equal the table", pass, detail.str()));

  // Representatives are PPs by both tests.
  std::size_t bad = 0;
  for (const auto& c : report.classes) {
    if (!is_pp_exhaustive(c.witness).is_pp || !hermite_dickson_test(c.witness).is_pp ||
        !is_pp_exhaustive(c.canonical).is_pp) {
      ++bad;
    }
  }
  out.checks.push_back(check(tag + " representatives pass both PP tests", bad == 0,
                             std::to_string(bad) + " failures"));
  return out;
}

SuiteResult verify_expected_tables(unsigned workers) {
  SuiteResult out{"tables", {}};
  ClassifyOptions opts;
  opts.workers = workers;
  for (int deg : {6, 7}) {
    for (int t = 3; t <= 7; ++t) {
      const auto part = verify_expected_table(classify(deg, t, opts));
      out.checks.insert(out.checks.end(), part.checks.begin(), part.checks.end());
    }
  }
  return out;
}

}  // namespace permpoly
