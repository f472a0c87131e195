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

#include "permpoly/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "permpoly/error.hpp"
#include "permpoly/expected_tables.hpp"

namespace permpoly {

namespace {

struct ShapeKeyHash {
  std::size_t operator()(const ShapeKey& k) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::uint32_t v : k) {
      h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

TableDiff diff_against_table(const FieldCtx& ctx, int deg, const std::vector<PpClass>& classes) {
  TableDiff diff;
  const ExpectedTable* table = find_expected_table(deg, ctx.degree());
  if (table == nullptr) return diff;
  std::set<ShapeKey> found;
  for (const auto& c : classes) found.insert(shape_key(c.canonical));
  const FieldCtx home = FieldCtx::create(table->t);
  std::set<ShapeKey> expected;
  for (const auto& entry : table->entries) {
    if (!entry.poly) {
      diff.missing.push_back(entry.as_printed);
      continue;
    }
    const FieldPoly f = map_to_field(parse_poly(home, *entry.poly), ctx);
    const ShapeKey key = shape_key(canonical_form(f));
    expected.insert(key);
    if (!found.contains(key)) diff.missing.push_back(*entry.poly);
  }
  for (const auto& c : classes) {
    if (!expected.contains(shape_key(c.canonical))) diff.extra.push_back(to_string(c.canonical));
  }
  return diff;
}

}  // namespace

std::string to_string(SearchMode mode) { return mode == SearchMode::kFast ? "fast" : "verify"; }

SearchMode parse_search_mode(const std::string& text) {
  if (text == "verify") return SearchMode::kVerify;
  if (text == "fast") return SearchMode::kFast;
  throw Error(ErrorCode::kParseError, "unknown mode '" + text + "'");
}

std::uint64_t candidate_space_size(int deg, std::uint64_t q) {
  if (deg == 6) return q * q * q * q + 2 * q * q * q;
  if (deg == 7) return 2 * q * q * q * q;
  throw Error(ErrorCode::kUnsupportedShape, "classification supports degrees 6 and 7");
}

bool in_candidate_space(const FieldCtx& ctx, int deg, const ShapeKey& key) {
  if (deg == 7) return key[0] == 0 && key[1] <= 1;
  if (deg == 6) {
    if (key[0] > 1) return false;
    return key[0] == 0 || key[1] == 0 || key[1] == ctx.trace_one().bits;
  }
  return false;
}

SearchPartial merge(SearchPartial lhs, const SearchPartial& rhs) {
  lhs.candidates_tested += rhs.candidates_tested;
  lhs.filtered += rhs.filtered;
  lhs.pps.insert(lhs.pps.end(), rhs.pps.begin(), rhs.pps.end());
  return lhs;
}

ClassificationReport finalize_report(const SearchPlan& plan, SearchPartial partial,
                                     SearchMode mode) {
  const FieldCtx& ctx = plan.field();
  const int deg = plan.degree();
  std::sort(partial.pps.begin(), partial.pps.end());

  ClassificationReport report;
  report.degree = deg;
  report.t = ctx.degree();
  report.modulus = ctx.modulus();
  report.mode = mode;
  report.candidates_tested = partial.candidates_tested;
  report.pps_found = partial.pps.size();
  report.filtered = partial.filtered;
  report.active_filters = plan.active_filters();

  // Each new PP seeds a class; its orbit, restricted to the candidate space,
  // claims the later PPs of the same class.
  std::unordered_map<ShapeKey, std::size_t, ShapeKeyHash> owner;
  for (const ShapeKey& key : partial.pps) {
    if (auto it = owner.find(key); it != owner.end()) {
      ++report.classes[it->second].count;
      continue;
    }
    const std::size_t idx = report.classes.size();
    FieldPoly witness = from_shape_key(ctx, deg, key);
    ShapeKey best = key;
    for_each_orbit_image(witness, [&](const ShapeKey& img) {
      best = std::min(best, img);
      if (in_candidate_space(ctx, deg, img)) owner.emplace(img, idx);
    });
    report.classes.push_back({from_shape_key(ctx, deg, best), std::move(witness), 1});
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const PpClass& a, const PpClass& b) {
              return shape_key(a.canonical) < shape_key(b.canonical);
            });
  report.table_diff = diff_against_table(ctx, deg, report.classes);
  report.pp_keys = std::move(partial.pps);
  return report;
}

ClassificationReport classify(int deg, int t, const ClassifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const SearchPlan plan(deg, t, options);

  unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = std::clamp(workers, 1U, plan.slice_count());

  std::atomic<std::uint32_t> next{0};
  std::vector<SearchPartial> partials(workers);
  auto work = [&](unsigned w) {
    for (std::uint32_t s = next++; s < plan.slice_count(); s = next++) {
      partials[w] = merge(std::move(partials[w]), plan.run_slice(s));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  SearchPartial total;
  for (const auto& part : partials) total = merge(std::move(total), part);
  if (total.candidates_tested != candidate_space_size(deg, plan.field().order())) {
    throw std::logic_error("candidate enumeration does not cover the normalized space");
  }
  ClassificationReport report = finalize_report(plan, std::move(total), options.mode);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace permpoly
