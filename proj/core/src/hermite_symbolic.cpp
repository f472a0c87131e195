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

#include "permpoly/hermite_symbolic.hpp"

#include <string>

#include "permpoly/digitcomb.hpp"
#include "permpoly/error.hpp"

namespace permpoly {

namespace {

class Extractor {
 public:
  Extractor(int deg, std::uint64_t tot, const std::map<int, int>& fixed) : deg_(deg), tot_(tot) {
    for (const auto& [var, value] : fixed) {
      if (var < 1 || var > kMaxSymVars || (value != 0 && value != 1)) {
        throw Error(ErrorCode::kUnboundVariable, "bad pin for variable " + std::to_string(var));
      }
      pin_[var - 1] = value;
    }
  }

  SymPoly run(std::uint64_t n) {
    stage(0, n, SymMonomial{}, 0);
    return std::move(result_);
  }

 private:
  void stage(int s, std::uint64_t digits, const SymMonomial& mono, std::uint64_t tsum) {
    if (tsum == tot_) {
      // Every remaining digit takes index 0.
      result_.toggle(mono);
      return;
    }
    const std::uint64_t incr = std::uint64_t{1} << s;
    if (digits == 0 || tsum + incr > tot_) return;
    const std::uint64_t rest = digits >> 1;
    if (tsum + 2 * incr <= tot_) stage(s + 1, rest, mono, tsum);
    if ((digits & 1) == 0) return;
    std::uint64_t ts = tsum;
    for (int ind = 1; ind < deg_; ++ind) {
      ts += incr;
      if (ts > tot_) break;
      const int pin = pin_[ind - 1];
      if (pin == 0) continue;
      SymMonomial next = mono;
      if (pin != 1) next.exps[ind - 1] += static_cast<std::uint32_t>(incr);
      stage(s + 1, rest, next, ts);
    }
  }

  int deg_;
  std::uint64_t tot_;
  std::array<int, kMaxSymVars> pin_ = [] {
    std::array<int, kMaxSymVars> a{};
    a.fill(-1);
    return a;
  }();
  SymPoly result_;
};

}  // namespace

SymPoly hermite_symbolic(int deg, std::uint64_t r, std::uint64_t m, std::uint64_t u,
                         const std::map<int, int>& fixed) {
  if (deg < 2 || deg - 1 > kMaxSymVars) {
    throw Error(ErrorCode::kUnsupportedShape, "degree " + std::to_string(deg) + " not supported");
  }
  if (r >= static_cast<std::uint64_t>(deg)) {
    throw Error(ErrorCode::kInvalidOffset, "residue r must be below the degree");
  }
  const std::int64_t tot = static_cast<std::int64_t>(deg) * static_cast<std::int64_t>(u) -
                           static_cast<std::int64_t>(r) + 1;
  if (tot < 0) {
    throw Error(ErrorCode::kInvalidOffset, "deg*u - r + 1 = " + std::to_string(tot) + " < 0");
  }
  const std::uint64_t q = static_cast<std::uint64_t>(deg) * m + r;
  if (static_cast<std::uint64_t>(deg) * (m + u) >= 2 * (q - 1)) {
    throw Error(ErrorCode::kWrapOverlap, "deg*(m+u) = " + std::to_string(deg * (m + u)) +
                                             " reaches 2(q-1) = " + std::to_string(2 * (q - 1)));
  }
  return Extractor(deg, static_cast<std::uint64_t>(tot), fixed).run(m + u);
}

SymPoly hermite_symbolic_for_field(int deg, int t, std::uint64_t u, const std::map<int, int>& fixed) {
  const WrapParams w = wrap_params(deg, t);
  return hermite_symbolic(deg, w.r, w.m, u, fixed);
}

bool hermite_symbolic_stable(int deg, int t, std::uint64_t u, const std::map<int, int>& fixed) {
  const SymPoly base = hermite_symbolic_for_field(deg, t, u, fixed);
  const SymPoly extended = hermite_symbolic_for_field(deg, t + 2 * wrap_period(deg), u, fixed);
  return base == extended;
}

}  // namespace permpoly
