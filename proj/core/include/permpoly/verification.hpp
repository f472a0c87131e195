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

#include <cstdint>
#include <string>
#include <vector>

#include "permpoly/classifier.hpp"
#include "permpoly/symbolic.hpp"

namespace permpoly {

inline constexpr std::uint64_t kDefaultSeed = 20260418;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  // Reported but ignored by SuiteResult::pass().
  bool informational = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
};

std::string to_string(const SuiteResult& result);

// Exact comparison of two symbolic expressions; on failure the detail holds
// lhs + rhs.
CheckResult check_identity(std::string name, const SymPoly& lhs, const SymPoly& rhs);

// Coefficient restrictions on degree-6 PPs x^6 + a x^5 + b x^4 + c x^3 + ...:
// t even: c = a^3 != 0; t odd: a != 0, c != 0, c != a^3. The class of x^6,
// and for t = 5 the class of x^6 + x^5 + x^2, are exempt. Each PP is checked
// as found and again after a random transform (rescaled to monic, constant
// dropped). Requires 3 <= t <= 7 (UnsupportedDegree otherwise).
SuiteResult verify_dickson_restrictions(int t, std::uint64_t seed = kDefaultSeed,
                                        unsigned workers = 1);
// Same, on an existing verify-mode degree-6 report.
SuiteResult verify_dickson_restrictions(const ClassificationReport& report,
                                        std::uint64_t seed = kDefaultSeed);

// x^5 + c x^2 + x + c^2 + c has exactly one root for every c outside {0, 1}.
// Requires odd t in [3, 11] (UnsupportedDegree otherwise).
SuiteResult verify_quintic_lemma(int t);

// Identities among the expressions of the odd-t degree-6 argument: exact
// symbolic ones and sampled checks over GF(2^13).
SuiteResult verify_proof_identities(std::uint64_t seed = kDefaultSeed, int samples = 1000);

// Compares one report with the expected table for its (degree, t).
SuiteResult verify_expected_table(const ClassificationReport& report);
// Runs classify in verify mode for degrees 6 and 7, t = 3..7.
SuiteResult verify_expected_tables(unsigned workers = 1);

}  // namespace permpoly
