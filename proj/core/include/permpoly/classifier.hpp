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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/equivalence.hpp"
#include "permpoly/polynomial.hpp"

namespace permpoly {

// verify: bijection test on every normalized candidate.
// fast: candidates must first pass necessary conditions (vanishing extracted
// Hermite coefficients, and for degree 6 with t odd a single root) before the
// bijection test.
enum class SearchMode { kVerify, kFast };

std::string to_string(SearchMode mode);
// Throws ParseError for anything but "verify" or "fast".
SearchMode parse_search_mode(const std::string& text);

struct ClassifyOptions {
  SearchMode mode = SearchMode::kVerify;
  // 0 selects std::thread::hardware_concurrency().
  unsigned workers = 1;
  std::optional<std::uint32_t> modulus;
  // Use the coefficient filters for every offset whose extraction is exact
  // at this t, even where filters are normally off. Testing aid for small fields.
  bool force_filters = false;
};

// Largest supported t for classify.
inline constexpr int kMaxSearchT = 11;

// Normalized candidates: degree 6 has q^4 + 2 q^3, degree 7 has 2 q^4.
std::uint64_t candidate_space_size(int deg, std::uint64_t q);

// True when `key` lies in the normalized candidate space.
bool in_candidate_space(const FieldCtx& ctx, int deg, const ShapeKey& key);

// Outcome of part of a search. Merging is associative and commutative once
// `pps` is sorted, which finalize_report does.
struct SearchPartial {
  std::uint64_t candidates_tested = 0;
  std::uint64_t filtered = 0;
  std::vector<ShapeKey> pps;
};

SearchPartial merge(SearchPartial lhs, const SearchPartial& rhs);

struct PpClass {
  FieldPoly canonical;
  // Least PP of the candidate space in this class.
  FieldPoly witness;
  std::uint64_t count = 0;
};

struct TableDiff {
  std::vector<std::string> missing;
  std::vector<std::string> extra;
  bool empty() const { return missing.empty() && extra.empty(); }
};

struct ClassificationReport {
  int degree = 0;
  int t = 0;
  std::uint32_t modulus = 0;
  SearchMode mode = SearchMode::kVerify;
  std::uint64_t candidates_tested = 0;
  std::uint64_t pps_found = 0;
  std::vector<PpClass> classes;
  TableDiff table_diff;
  std::int64_t elapsed_ms = 0;

  // Not serialized.
  std::uint64_t filtered = 0;
  std::vector<std::string> active_filters;
  std::vector<ShapeKey> pp_keys;
};

// Exhaustive search of the normalized degree-`deg` candidates over GF(2^t).
// Throws UnsupportedShape (deg not 6 or 7), FieldTooSmall (2^t <= deg) and
// SearchTooLarge (t > kMaxSearchT).
ClassificationReport classify(int deg, int t, const ClassifyOptions& options = {});

// Building blocks of classify, exposed for partitioned runs.
class SearchPlan {
 public:
  SearchPlan(int deg, int t, const ClassifyOptions& options);
  ~SearchPlan();
  SearchPlan(const SearchPlan&) = delete;
  SearchPlan& operator=(const SearchPlan&) = delete;

  const FieldCtx& field() const;
  int degree() const;
  // Slices are indexed by the x^3 coefficient, 0 .. q-1.
  std::uint32_t slice_count() const;
  SearchPartial run_slice(std::uint32_t slice) const;
  std::vector<std::string> active_filters() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Groups the PPs of `partial` into classes and compares against the
// expected table for (deg, t).
ClassificationReport finalize_report(const SearchPlan& plan, SearchPartial partial,
                                     SearchMode mode);

}  // namespace permpoly
