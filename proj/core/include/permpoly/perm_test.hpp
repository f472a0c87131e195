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
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "permpoly/polynomial.hpp"

namespace permpoly {

struct RootCountNotOne {
  std::size_t roots = 0;
};

// The reduced f^n has a nonzero x^(q-1) coefficient.
struct ExponentDegreeTooHigh {
  std::uint64_t n = 0;
};

using CriterionFailure = std::variant<RootCountNotOne, ExponentDegreeTooHigh>;

struct PermVerdict {
  bool is_pp = false;
  // Set by the Hermite-Dickson test when is_pp is false.
  std::optional<CriterionFailure> failure;
  // Set by the exhaustive test when is_pp is false: x1 < x2 with f(x1) = f(x2).
  std::optional<std::pair<GFElem, GFElem>> collision;
};

// Evaluates f on the whole field; stops at the first repeated image.
PermVerdict is_pp_exhaustive(const FieldPoly& f);

// Hermite-Dickson criterion for q = 2^t: exactly one root, and for every odd
// n in [1, q-2] the reduced f^n has degree <= q-2. Throws DegreeTooLarge when
// deg f >= q.
PermVerdict hermite_dickson_test(const FieldPoly& f);

std::string describe(const PermVerdict& v, const FieldCtx& ctx);

}  // namespace permpoly
