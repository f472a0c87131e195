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

#include <gtest/gtest.h>

#include "permpoly/classifier.hpp"
#include "permpoly/error.hpp"
#include "permpoly/fixtures.hpp"
#include "permpoly/symbolic.hpp"
#include "permpoly/verification.hpp"

namespace permpoly {
namespace {

TEST(QuinticLemma, SmallFields) {
  for (int t : {3, 5, 7}) {
    const SuiteResult r = verify_quintic_lemma(t);
    EXPECT_TRUE(r.pass()) << to_string(r);
  }
  EXPECT_THROW(verify_quintic_lemma(4), Error);
  EXPECT_THROW(verify_quintic_lemma(13), Error);
}

TEST(DicksonRestrictions, OddConditionsFailAtThree) {
  // x^6 + x^3 + x^2 (a = 0) and x^6 + x^5 + x^4 (c = 0) both permute GF(8).
  const SuiteResult r = verify_dickson_restrictions(3);
  EXPECT_FALSE(r.pass());
  EXPECT_NE(to_string(r).find("x^6+x^3+x^2 violates"), std::string::npos) << to_string(r);
}

TEST(DicksonRestrictions, SmallFields) {
  for (int t : {4, 5}) {
    const SuiteResult r = verify_dickson_restrictions(t);
    EXPECT_TRUE(r.pass()) << to_string(r);
    EXPECT_FALSE(r.checks.empty());
  }
  EXPECT_THROW(verify_dickson_restrictions(8), Error);
}

TEST(DicksonRestrictions, FromReport) {
  const ClassificationReport r = classify(6, 4);
  EXPECT_TRUE(verify_dickson_restrictions(r).pass());
}

TEST(ProofIdentities, OnlyTheC23RelationFails) {
  const SuiteResult r = verify_proof_identities(kDefaultSeed, 40);
  std::vector<std::string> failing;
  for (const auto& c : r.checks) {
    if (c.informational) {
      EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
    } else if (!c.pass) {
      failing.push_back(c.name);
    }
  }
  EXPECT_EQ(failing, std::vector<std::string>{"(v) c^23 E3 = c (c+1)^4 E4^4 E7^4 on E1 = 0"})
      << to_string(r);
}

TEST(ProofIdentities, PerturbedFactorizationIsDetected) {
  using namespace fixtures;
  const SymPoly rhs = parse_sympoly("c+1") * e4_expanded() * e6();
  EXPECT_TRUE(check_identity("E5", e5(), rhs).pass);
  const CheckResult bad = check_identity("E5", e5() + parse_sympoly("b^2c^3"), rhs);
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.detail, "difference b^2c^3");
}

TEST(ExpectedTables, SmallFieldsPass) {
  for (int deg : {6, 7}) {
    for (int t : {3, 4, 5}) {
      const SuiteResult r = verify_expected_table(classify(deg, t));
      EXPECT_TRUE(r.pass()) << to_string(r);
    }
  }
}

TEST(ExpectedTables, MismatchIsReported) {
  ClassificationReport r = classify(6, 5);
  r.classes.pop_back();
  r.table_diff.missing.push_back("x^6+x^5+x^2");
  EXPECT_FALSE(verify_expected_table(r).pass());
}

TEST(SuiteText, Format) {
  SuiteResult s{"demo", {{"one", true, "ok"}, {"two", false, "bad"}, {"three", false, "", true}}};
  EXPECT_FALSE(s.pass());
  const std::string text = to_string(s);
  EXPECT_NE(text.find("PASS one: ok"), std::string::npos);
  EXPECT_NE(text.find("FAIL two: bad"), std::string::npos);
  EXPECT_NE(text.find("INFO three"), std::string::npos);
  s.checks.erase(s.checks.begin() + 1);
  EXPECT_TRUE(s.pass());
}

}  // namespace
}  // namespace permpoly
