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

#include <optional>
#include <string>
#include <vector>

#include "permpoly/polynomial.hpp"

namespace permpoly {

struct ExpectedEntry {
  // Literal over the default field for t; empty for a row that does not
  // describe a valid polynomial.
  std::optional<std::string> poly;
  std::string as_printed;
  bool typo = false;
};

struct ExpectedTable {
  int degree = 0;
  int t = 0;
  bool pps_exist = false;
  std::vector<ExpectedEntry> entries;
};

// Tables compiled in from data/expected_tables.json.
const std::vector<ExpectedTable>& expected_tables();
// nullptr when no table is recorded for (degree, t).
const ExpectedTable* find_expected_table(int degree, int t);
const char* expected_tables_json();

// Elementwise isomorphism GF(2^t)[from] -> GF(2^t)[to]: result[x.bits] is the
// image of x. Throws FieldMismatch when the degrees differ.
std::vector<GFElem> field_isomorphism(const FieldCtx& from, const FieldCtx& to);

// Applies field_isomorphism to every coefficient.
FieldPoly map_to_field(const FieldPoly& f, const FieldCtx& to);

// Parsed entries of a table, mapped into `ctx`. Typo rows are skipped.
std::vector<FieldPoly> expected_polys(const ExpectedTable& table, const FieldCtx& ctx);

}  // namespace permpoly
