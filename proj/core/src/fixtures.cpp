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

#include "permpoly/fixtures.hpp"

#include <stdexcept>

namespace permpoly::fixtures {

namespace {

// Variable indices: a=1 .. f=6.
constexpr int kA = 1;
constexpr int kB = 2;

const char* const kE3 =
    "((c^64+b^16c^64+b^64c^32+b^112+b^64d^16+e^32+b^16d^32+c^32d^16+d^16e^32)(1+c^4)"
    "+(c^64+b^96+b^64c^16+b^64e^16+d^32+c^48+b^32e^16+c^16e^32+d^32e^16)(c^8+b^8c^4+e^4)"
    "+(c^64+b^96+b^80+b^64d^16+d^32+b^16c^32+b^32d^16+b^16e^32+d^48)(e^8+c^4d^8+c^8e^4)"
    "+(b^64+b^64c^16+c^32+b^32c^16+e^16+e^32+d^32c^16+c^32e^16)e^12)c";

const char* const kG13Printed =
    "(d^16c^8+c^16e^8)b"
    "+(e^16+d^16b^8+c^16d^8+b^16f^8)(b^5+e^2+d^2b+c^2d+b^2f)"
    "+(c^24+b^16e^8)(d^4b+c^4(c^2+b^3+f)+b^4(e^2+d^2b+c^2d+b^2f)+f^3)"
    "+(d^16+c^16b^8+b^16d^8)(f^4b+e^4(c^2+b^3+f)+d^4(e^2+d^2b+c^2d+b^2f)"
    "+c^4(f^2b+e^2d+d^2f)+b^2f^3)"
    "+b^16c^8(f^4(e^2+d^2b+c^2d+b^2f)+e^4(f^2b+e^2d+d^2f)+d^4f^3)"
    "+(c^16+b^24+f^8)f^7";

const char* const kG13Corrected =
    "(d^16c^8+c^16e^8)b"
    "+(e^16+d^16b^8+c^16d^8+b^16f^8)(b^5+e^2+d^2b+c^2d+b^2f)"
    "+(c^24+b^16e^8)(d^4b+c^4(c^2+b^3+f)+b^4(e^2+d^2b+c^2d+b^2f)+f^3)"
    "+(d^16+c^16b^8+b^16d^8)(f^4b+e^4(c^2+b^3+f)+d^4(e^2+d^2b+c^2d+b^2f)"
    "+c^4(f^2b+e^2d+d^2f)+b^4f^3)"
    "+b^16c^8(f^4(e^2+d^2b+c^2d+b^2f)+e^4(f^2b+e^2d+d^2f)+d^4f^3)"
    "+(c^16+b^24+f^8)f^7";

const char* const kH19 =
    "(d^32+c^32b^16+b^32d^16)b"
    "+b^32c^16(d^4b+c^4(c^2+b^3+f)+b^4(e^2+d^2b+c^2d+b^2f)+f^3)"
    "+(c^32+b^48+f^16)(f^4(e^2+d^2b+c^2d+b^2f)+e^4(f^2b+e^2d+d^2f)+d^4f^3)";

std::vector<HermiteFixture> build() {
  const std::map<int, int> a1 = {{kA, 1}};
  const std::map<int, int> a1c1 = {{kA, 1}, {3, 1}};
  const std::map<int, int> a0 = {{kA, 0}};
  std::vector<HermiteFixture> v;
  // Even t, 2^t = 6m + 4, with a = c = 1.
  v.push_back({"EVEN1", 6, 8, 5, a1c1, "(b^8+1+e^4)(1+b^2+e)+(b^8+b^4+d^4)(e^2+d^2+e)", {}, {}});
  v.push_back({"EVEN2", 6, 8, 13, a1c1, "(b^32+b^16+d^16)(1+b^2+e^2+d^2)", {}, {}});
  // Odd t, 2^t = 6m + 2, with a = 1.
  v.push_back({"E1", 6, 9, 2, a1, "b^4(1+c)+(c^2+b^2c+e)+(e^2+cd^2+c^2e)", {}, {}});
  v.push_back({"E2", 6, 9, 6, a1, "(b^16+b^8+d^8)(1+c)+(1+c^8)(e^2+cd^2+c^2e)", {}, {}});
  v.push_back({"E3", 6, 9, 40, a1, kE3, {}, {}});
  // Degree 7, 2^t = 7m + 2, x^6 coefficient 0.
  v.push_back({"G1", 7, 10, 1, a0, "c^2+b^3+f", {}, {}});
  v.push_back({"G3", 7, 10, 3, a0, "e^4+d^5", {}, {}});
  v.push_back({"G11", 7, 10, 11, a0,
               "(c^24+b^16e^8)d+(d^16+c^16b^8+b^16d^8)(c^4+b^4d)+b^16c^8(e^4+d^5)"
               "+(c^16+b^24+f^8)f^4d",
               {}, {}});
  v.push_back({"G13", 7, 10, 13, a0, kG13Printed, std::string(kG13Corrected),
               "term b^2f^3 inside the (d^16+c^16b^8+b^16d^8)(...) factor should be b^4f^3"});
  v.push_back({"G19", 7, 10, 19, a0, "d^33", {}, {}});
  // Degree 7, 2^t = 7m + 4, x^6 coefficient 0.
  v.push_back({"H1", 7, 8, 1, a0, "d", {}, {}});
  v.push_back({"H3", 7, 8, 3, a0, "d^4b+c^4(c^2+b^3+f)+b^4(e^2+d^2b+c^2d+b^2f)+f^3", {}, {}});
  v.push_back({"H9", 7, 8, 9, a0, "f^8c^4+e^12+(f^8b^4+e^8d^4+d^8f^4)d", {}, {}});
  v.push_back({"H15", 7, 8, 15, a0, "(c^32+b^48+f^32)(c^2+b^3+f)",
               std::string("(c^32+b^48+f^16)(c^2+b^3+f)"),
               "first factor should read c^32+b^48+f^16, i.e. (c^2+b^3+f)^16"});
  v.push_back({"H19", 7, 8, 19, a0, kH19, {}, {}});
  (void)kB;
  return v;
}

}  // namespace

const std::vector<HermiteFixture>& hermite_fixtures() {
  static const std::vector<HermiteFixture> fixtures = build();
  return fixtures;
}

const HermiteFixture& hermite_fixture(const std::string& name) {
  for (const auto& f : hermite_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("no fixture named " + name);
}

std::string gamma_text() { return "c(c+1)(c^2+b^2)+(c+b^2)^2"; }

SymPoly gamma() { return parse_sympoly(gamma_text()); }

SymPoly parse_with_gamma(const std::string& text) {
  std::string expanded;
  for (char ch : text) {
    if (ch == 'G') {
      expanded += "(" + gamma_text() + ")";
    } else {
      expanded += ch;
    }
  }
  return parse_sympoly(expanded);
}

SymPoly e4_expanded() { return parse_sympoly("e^2+(c+1)e+c^4+c^3+(b^2+1)c^2+b^2c+b^4"); }

SymPoly e4_gamma_form() { return parse_with_gamma("e^2+(c+1)e+G"); }

SymPoly e5() {
  return parse_sympoly(
      "(c+1)e^8+(c+1)^9e^4+c^4(c+1)^8e+(c+1)(b^16+c^8+c^4b^4+c^12b^4)+c^5(c+1)^8(b^2+c)");
}

SymPoly e6() {
  return parse_with_gamma(
      "e^6+(c+1)e^5+(G+c^2+1)e^4+(c+1)^3e^3+(G^2+(c^2+1)G+c^8+c^4)e^2"
      "+((c+1)G^2+c^4(c+1)^5)e+(G^3+(c^8+c^4)G+c^4(c+1)^6)");
}

SymPoly e7() {
  return parse_sympoly(
      "(c+1)e^11+(c^4+c^3+b^2c^2+b^2c+(b^4+1))e^10+(c^4+b^8)e^8"
      "+(c^7+c^6+b^4c^5+b^4c^4+b^4c^3+b^4c^2+c+1)e^7"
      "+(c^9+(b^4+b^2)c^8+(b^4+b^2)c^7+(b^6+b^4)c^6+(b^6+b^4)c^5+(b^6+b^4)c^4+(b^6+1)c^3"
      "+(b^12+b^8+b^4+b^2)c^2+b^2c+(b^4+1))e^6"
      "+((b^8+1)c^5+(b^8+1)c^4+(b^12+b^4)c^3+(b^12+b^4)c^2)e^5"
      "+(c^10+b^4c^8+(b^8+1)c^7+(b^12+b^10+b^8+b^2)c^6+(b^12+b^10+b^4+b^2)c^5"
      "+(b^14+b^6+b^4+1)c^4+(b^14+b^6)c^3+(b^16+b^8+b^4)c^2+b^8)e^4"
      "+(c^9+c^8+b^16c+b^16)e^3"
      "+(c^14+c^12+c^11+(b^4+b^2)c^10+b^2c^9+(b^4+1)c^8+b^16c^6+b^16c^4+b^16c^3"
      "+(b^20+b^18)c^2+b^18c+(b^20+b^16))e^2"
      "+(c^15+c^14+b^4c^11+b^4c^10+b^16c^7+b^16c^6+b^20c^3+b^20c^2)e"
      "+c^18+c^17+b^2c^16+b^2c^15+c^14+b^4c^13+(b^6+1)c^12+b^6c^11+(b^16+b^8+b^4)c^10"
      "+b^16c^9+(b^18+b^8)c^8+b^18c^7+b^16c^6+b^20c^5+(b^22+b^16)c^4+b^22c^3+(b^24+b^20)c^2"
      "+b^24");
}

SymPoly e9() {
  return parse_sympoly(
      "e^4+(c^3+c^2+c+1)e+c^5+(b^4+b^2+1)c^4+(b^2+1)c^3+(b^2+1)c^2+b^2c+b^8+b^4+1");
}

SymPoly e10() {
  return parse_sympoly(
      "c^16b^8+c^16e^4+c^18e+c^19e+c^20b^4+c^20b^2+c^17e+c^8b^4"
      "+b^2c^9+c^10b^2+c^8b^8+ec^11+c^9e+b^2c^18+c^10e+c^19b^2+c^16e"
      "+b^2c^12+c^12b^4+c^8e+c^17b^2+c^8e^4+c^11b^2+c^16b^4"
      "+c^10+c^8+c^12+c^11+c^18+c^16+c^13+c^21+c^19+c^20");
}

}  // namespace permpoly::fixtures
