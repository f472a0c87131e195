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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/symbolic.hpp"

namespace permpoly::fixtures {

// A displayed coefficient formula: [x^(q-1)] f^(m+u) for the generic degree
// `deg` shape over GF(2^t), under the given variable pins.
struct HermiteFixture {
  std::string name;
  int deg = 0;
  int t = 0;
  std::uint64_t u = 0;
  std::map<int, int> pins;
  std::string printed;
  // Set when the printed formula disagrees with the exact coefficient; the
  // corrected text and a short description of the misprint.
  std::optional<std::string> corrected;
  std::string erratum;
};

const std::vector<HermiteFixture>& hermite_fixtures();
const HermiteFixture& hermite_fixture(const std::string& name);

// Expressions from the odd-t degree-6 argument, in the variables b, c, d, e
// (a pinned to 1). gamma is substituted where the display uses it.
std::string gamma_text();
SymPoly gamma();
SymPoly e4_expanded();
SymPoly e4_gamma_form();
SymPoly e5();
SymPoly e6();
SymPoly e7();
SymPoly e9();
SymPoly e10();

// Parses `text` after replacing every 'G' with (gamma).
SymPoly parse_with_gamma(const std::string& text);

}  // namespace permpoly::fixtures
