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

#include "permpoly/expected_tables.hpp"

#include <json.hpp>

#include "expected_tables_data.hpp"
#include "permpoly/error.hpp"

namespace permpoly {

namespace {

std::vector<ExpectedTable> load() {
  const auto doc = nlohmann::json::parse(detail::kExpectedTablesJson);
  std::vector<ExpectedTable> out;
  for (const auto& jt : doc.at("tables")) {
    ExpectedTable table;
    table.degree = jt.at("degree").get<int>();
    table.t = jt.at("t").get<int>();
    table.pps_exist = jt.at("pps_exist").get<bool>();
    for (const auto& je : jt.at("entries")) {
      ExpectedEntry e;
      if (!je.at("poly").is_null()) e.poly = je.at("poly").get<std::string>();
      e.as_printed = je.value("as_printed", e.poly.value_or(""));
      e.typo = je.value("typo", false);
      table.entries.push_back(std::move(e));
    }
    out.push_back(std::move(table));
  }
  return out;
}

}  // namespace

const std::vector<ExpectedTable>& expected_tables() {
  static const std::vector<ExpectedTable> tables = load();
  return tables;
}

const ExpectedTable* find_expected_table(int degree, int t) {
  for (const auto& table : expected_tables()) {
    if (table.degree == degree && table.t == t) return &table;
  }
  return nullptr;
}

const char* expected_tables_json() { return detail::kExpectedTablesJson; }

std::vector<GFElem> field_isomorphism(const FieldCtx& from, const FieldCtx& to) {
  if (from.degree() != to.degree()) {
    throw Error(ErrorCode::kFieldMismatch, "fields have different degrees");
  }
  const std::uint32_t q = from.order();
  const int t = from.degree();
  // A root in `to` of the modulus defining `from` is the image of x.
  GFElem root = kZero;
  for (std::uint32_t y = 1; y < q; ++y) {
    GFElem acc = kZero;
    for (int i = t; i >= 0; --i) {
      acc = to.mul(acc, GFElem(y));
      if ((from.modulus() >> i) & 1U) acc += kOne;
    }
    if (acc.is_zero()) {
      root = GFElem(y);
      break;
    }
  }
  std::vector<GFElem> basis(t);
  basis[0] = kOne;
  for (int i = 1; i < t; ++i) basis[i] = to.mul(basis[i - 1], root);
  std::vector<GFElem> image(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    GFElem acc = kZero;
    for (int i = 0; i < t; ++i) {
      if ((x >> i) & 1U) acc += basis[i];
    }
    image[x] = acc;
  }
  return image;
}

FieldPoly map_to_field(const FieldPoly& f, const FieldCtx& to) {
  if (f.field() == to) return f;
  const auto image = field_isomorphism(f.field(), to);
  std::vector<GFElem> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (GFElem c : f.coeffs()) coeffs.push_back(image[c.bits]);
  return FieldPoly(to, std::move(coeffs));
}

std::vector<FieldPoly> expected_polys(const ExpectedTable& table, const FieldCtx& ctx) {
  const FieldCtx home = FieldCtx::create(table.t);
  std::vector<FieldPoly> out;
  for (const auto& entry : table.entries) {
    if (!entry.poly) continue;
    out.push_back(map_to_field(parse_poly(home, *entry.poly), ctx));
  }
  return out;
}

}  // namespace permpoly
