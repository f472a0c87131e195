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

#include <algorithm>
#include <array>

#include "permpoly/classifier.hpp"
#include "permpoly/digitcomb.hpp"
#include "permpoly/error.hpp"
#include "permpoly/hermite_symbolic.hpp"

namespace permpoly {

namespace {

// Offsets u for which [x^(q-1)] f^(m+u) is known to be a fixed polynomial in
// the coefficients once m >= min_m.
struct OffsetFamily {
  int deg;
  std::uint64_t r;
  std::uint64_t min_m;
  std::vector<std::uint64_t> offsets;
};

const std::vector<OffsetFamily>& offset_families() {
  static const std::vector<OffsetFamily> families = {
      {6, 2, 85, {2, 6, 40}},
      {6, 4, 42, {5, 13}},
      {7, 1, 0, {0}},
      {7, 2, 146, {1, 3, 11, 13, 19}},
      {7, 4, 36, {1, 3, 9, 15, 19}},
  };
  return families;
}

// Monomial in the prefix coefficients; exponents reduced mod q - 1, which is
// exact for nonzero values. Zero values are handled before the log lookup.
struct LogMonomial {
  int count = 0;
  std::array<int, kMaxSymVars> power{};  // x^power coefficient
  std::array<std::uint32_t, kMaxSymVars> exp{};
};

enum class FilterKind { kConstant, kLinearized, kGeneral };

// A coefficient filter written as a univariate polynomial in the x^1
// coefficient, whose coefficients are polynomials in the other slots.
// kConstant: no x^1 dependence. kLinearized: every x^1 exponent is 0 or a
// power of two, so the nonconstant part is F_2-linear.
struct CompiledFilter {
  std::string label;
  FilterKind kind = FilterKind::kGeneral;
  std::vector<std::uint64_t> inner_exp;  // ascending
  std::vector<int> pow_table;            // -1 for exponent 0
  std::vector<std::vector<LogMonomial>> coeffs;
  std::size_t terms = 0;
};

CompiledFilter compile_filter(const SymPoly& p, int deg, std::uint32_t ord, std::string label) {
  const int inner_var = deg - 1;  // A_(deg-1) multiplies x^1
  CompiledFilter out;
  out.label = std::move(label);
  const auto by_power = coefficients_in(p, inner_var);
  bool linear = true;
  for (std::size_t k = 0; k < by_power.size(); ++k) {
    if (by_power[k].is_zero()) continue;
    out.inner_exp.push_back(k);
    if (k != 0 && (k & (k - 1)) != 0) linear = false;
    std::vector<LogMonomial> monos;
    for (const auto& m : by_power[k].monomials()) {
      LogMonomial lm;
      for (int v = 1; v < deg; ++v) {
        const std::uint32_t e = m.exponent(v);
        if (e == 0) continue;
        lm.power[lm.count] = deg - v;
        lm.exp[lm.count] = e % ord;
        ++lm.count;
      }
      monos.push_back(lm);
    }
    out.terms += monos.size();
    out.coeffs.push_back(std::move(monos));
  }
  if (out.inner_exp.empty() || out.inner_exp.back() == 0) {
    out.kind = FilterKind::kConstant;
  } else if (linear) {
    out.kind = FilterKind::kLinearized;
  }
  return out;
}

}  // namespace

struct SearchPlan::Impl {
  FieldCtx ctx;
  int deg = 0;
  int t = 0;
  std::uint32_t q = 0;
  std::uint32_t ord = 0;
  const std::uint32_t* log = nullptr;
  const std::uint32_t* antilog = nullptr;
  // log_pow[k][x] = k * log(x) mod (q - 1), for 1 <= k <= deg.
  std::vector<std::vector<std::uint32_t>> log_pow;
  std::vector<std::uint32_t> top;  // x^deg
  // Same layout for the x^1 exponents used by the filters.
  std::vector<std::vector<std::uint32_t>> inner_pow;
  // Filters indexed by the x^5 coefficient (0 or 1).
  std::array<std::vector<CompiledFilter>, 2> filters;
  bool root_prefilter = false;
  std::vector<std::string> labels;

  explicit Impl(FieldCtx field) : ctx(std::move(field)) {}

  void add_filter(int pin, CompiledFilter f);
  SearchPartial run(std::uint32_t slice) const;
};

void SearchPlan::Impl::add_filter(int pin, CompiledFilter f) {
  for (std::uint64_t k : f.inner_exp) {
    if (k == 0) {
      f.pow_table.push_back(-1);
      continue;
    }
    const std::uint64_t kr = k % ord;
    std::vector<std::uint32_t> table(q, 0);
    for (std::uint32_t x = 1; x < q; ++x) {
      table[x] = static_cast<std::uint32_t>((kr * log[x]) % ord);
    }
    int idx = -1;
    for (std::size_t i = 0; i < inner_pow.size(); ++i) {
      if (inner_pow[i] == table) idx = static_cast<int>(i);
    }
    if (idx < 0) {
      idx = static_cast<int>(inner_pow.size());
      inner_pow.push_back(std::move(table));
    }
    f.pow_table.push_back(idx);
  }
  filters[pin].push_back(std::move(f));
}

namespace {

struct Scratch {
  std::array<std::uint32_t, 8> coef{};
  std::array<std::vector<std::uint32_t>, 6> level;
  std::vector<std::uint32_t> stamp;
  std::uint32_t cur = 0;
  std::vector<std::uint32_t> survivors;
  std::vector<std::uint32_t> next;
  std::vector<std::uint32_t> cvals;
};

int high_bit(std::uint32_t v) { return 31 - __builtin_clz(v); }

}  // namespace

SearchPartial SearchPlan::Impl::run(std::uint32_t slice) const {
  SearchPartial out;
  Scratch s;
  for (auto& l : s.level) l.assign(q, 0);
  s.stamp.assign(q, 0);
  s.survivors.reserve(q);
  s.next.reserve(q);

  const std::uint32_t mu = ctx.trace_one().bits;

  auto coef_eval = [&](const std::vector<LogMonomial>& monos) {
    std::uint32_t acc = 0;
    for (const auto& m : monos) {
      std::uint64_t lg = 0;
      bool zero = false;
      for (int i = 0; i < m.count; ++i) {
        const std::uint32_t v = s.coef[m.power[i]];
        if (v == 0) {
          zero = true;
          break;
        }
        lg += static_cast<std::uint64_t>(log[v]) * m.exp[i];
      }
      if (!zero) acc ^= antilog[lg % ord];
    }
    return acc;
  };

  // Value of filter f at x^1 coefficient e, with s.cvals already evaluated.
  auto filter_at = [&](const CompiledFilter& f, std::uint32_t e) {
    std::uint32_t v = 0;
    for (std::size_t j = 0; j < f.inner_exp.size(); ++j) {
      const std::uint32_t c = s.cvals[j];
      if (c == 0) continue;
      if (f.pow_table[j] < 0) {
        v ^= c;
      } else if (e != 0) {
        v ^= antilog[log[c] + inner_pow[f.pow_table[j]][e]];
      }
    }
    return v;
  };

  // All e with L(e) = C_0, L the F_2-linear part; written to s.survivors.
  auto solve_linear = [&](const CompiledFilter& f) {
    std::array<std::uint32_t, 32> pivot_val{};
    std::array<std::uint32_t, 32> pivot_combo{};
    std::array<std::uint32_t, 32> kernel{};
    int kernel_dim = 0;
    std::uint32_t target = 0;
    for (std::size_t j = 0; j < f.inner_exp.size(); ++j) {
      if (f.pow_table[j] < 0) target ^= s.cvals[j];
    }
    for (int i = 0; i < t; ++i) {
      std::uint32_t v = filter_at(f, 1U << i) ^ target;
      std::uint32_t combo = 1U << i;
      while (v != 0) {
        const int hb = high_bit(v);
        if (pivot_val[hb] == 0) {
          pivot_val[hb] = v;
          pivot_combo[hb] = combo;
          break;
        }
        v ^= pivot_val[hb];
        combo ^= pivot_combo[hb];
      }
      if (v == 0) kernel[kernel_dim++] = combo;
    }
    std::uint32_t base = 0;
    while (target != 0) {
      const int hb = high_bit(target);
      if (pivot_val[hb] == 0) return;
      target ^= pivot_val[hb];
      base ^= pivot_combo[hb];
    }
    s.survivors.push_back(base);
    for (std::uint32_t i = 1; i < (1U << kernel_dim); ++i) {
      base ^= kernel[__builtin_ctz(i)];
      s.survivors.push_back(base);
    }
  };

  // Applies the filters for the current prefix. Returns false when every
  // x^1 value is rejected; otherwise s.survivors holds the remaining values
  // unless `all` stays true.
  auto run_filters = [&](bool& all) {
    all = true;
    s.survivors.clear();
    for (const auto& f : filters[s.coef[5]]) {
      s.cvals.resize(f.coeffs.size());
      for (std::size_t j = 0; j < f.coeffs.size(); ++j) s.cvals[j] = coef_eval(f.coeffs[j]);
      if (f.kind == FilterKind::kConstant) {
        if (filter_at(f, 0) != 0) {
          all = false;
          s.survivors.clear();
          return false;
        }
        continue;
      }
      if (all && f.kind == FilterKind::kLinearized) {
        all = false;
        solve_linear(f);
      } else {
        s.next.clear();
        if (all) {
          for (std::uint32_t e = 0; e < q; ++e) {
            if (filter_at(f, e) == 0) s.next.push_back(e);
          }
          all = false;
        } else {
          for (std::uint32_t e : s.survivors) {
            if (filter_at(f, e) == 0) s.next.push_back(e);
          }
        }
        std::swap(s.survivors, s.next);
      }
      if (s.survivors.empty()) return false;
    }
    return true;
  };

  auto test_inner = [&](const std::uint32_t* g, bool all) {
    const std::uint32_t count = all ? q : static_cast<std::uint32_t>(s.survivors.size());
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t e = all ? i : s.survivors[i];
      const std::uint32_t le = e ? log[e] : 0;
      if (root_prefilter && !all) {
        bool extra_root = false;
        for (std::uint32_t x = 1; x < q; ++x) {
          if ((g[x] ^ (e ? antilog[le + log[x]] : 0)) == 0) {
            extra_root = true;
            break;
          }
        }
        if (extra_root) {
          ++out.filtered;
          continue;
        }
      }
      if (++s.cur == 0) {
        std::fill(s.stamp.begin(), s.stamp.end(), 0);
        s.cur = 1;
      }
      s.stamp[0] = s.cur;  // f(0) = 0
      bool bijective = true;
      for (std::uint32_t x = 1; x < q; ++x) {
        const std::uint32_t y = g[x] ^ (e ? antilog[le + log[x]] : 0);
        if (s.stamp[y] == s.cur) {
          bijective = false;
          break;
        }
        s.stamp[y] = s.cur;
      }
      if (bijective) {
        ShapeKey key{};
        for (int k = deg - 1; k >= 2; --k) key[deg - 1 - k] = s.coef[k];
        key[deg - 2] = e;
        out.pps.push_back(key);
      }
    }
  };

  auto values_for = [&](int k, std::vector<std::uint32_t>& vals) {
    vals.clear();
    if (k == 3) {
      vals.push_back(slice);
    } else if (deg == 7 && k == 6) {
      vals.push_back(0);
    } else if (k == 5) {
      vals = {0, 1};
    } else if (deg == 6 && k == 4 && s.coef[5] == 1) {
      vals = {0, mu};
    } else {
      for (std::uint32_t v = 0; v < q; ++v) vals.push_back(v);
    }
  };

  auto extend = [&](const std::uint32_t* prev, std::vector<std::uint32_t>& cur, int k) {
    const std::uint32_t v = s.coef[k];
    if (v == 0) {
      std::copy(prev, prev + q, cur.begin());
      return;
    }
    const std::uint32_t lv = log[v];
    const auto& lp = log_pow[k];
    cur[0] = prev[0];
    for (std::uint32_t x = 1; x < q; ++x) cur[x] = prev[x] ^ antilog[lv + lp[x]];
  };

  // Slots x^(deg-1) .. x^2; level i holds x^deg plus slots 0..i evaluated
  // at every x. The last level is built only when some x^1 value survives.
  const int slots = deg - 2;
  std::array<std::vector<std::uint32_t>, 6> vals;
  auto descend = [&](auto&& self, int i) -> void {
    const int k = deg - 1 - i;
    const std::uint32_t* prev = i == 0 ? top.data() : s.level[i - 1].data();
    values_for(k, vals[i]);
    for (std::uint32_t v : vals[i]) {
      s.coef[k] = v;
      if (i + 1 < slots) {
        extend(prev, s.level[i], k);
        self(self, i + 1);
        continue;
      }
      out.candidates_tested += q;
      bool all = true;
      if (!run_filters(all)) {
        out.filtered += q;
        continue;
      }
      if (!all) out.filtered += q - s.survivors.size();
      extend(prev, s.level[i], k);
      test_inner(s.level[i].data(), all);
    }
    s.coef[k] = 0;
  };
  descend(descend, 0);
  return out;
}

SearchPlan::SearchPlan(int deg, int t, const ClassifyOptions& options) {
  if (deg != 6 && deg != 7) {
    throw Error(ErrorCode::kUnsupportedShape, "classification supports degrees 6 and 7");
  }
  if (t < kMinExtensionDegree || (std::uint64_t{1} << t) <= static_cast<std::uint64_t>(deg)) {
    throw Error(ErrorCode::kFieldTooSmall, "field GF(2^" + std::to_string(t) + ") is too small");
  }
  if (t > kMaxSearchT) {
    throw Error(ErrorCode::kSearchTooLarge,
                "t = " + std::to_string(t) + " exceeds the search bound " +
                    std::to_string(kMaxSearchT));
  }
  impl_ = std::make_unique<Impl>(FieldCtx::create(t, options.modulus));
  Impl& p = *impl_;
  p.deg = deg;
  p.t = t;
  p.q = p.ctx.order();
  p.ord = p.q - 1;
  p.log = p.ctx.log_table().data();
  p.antilog = p.ctx.antilog_table().data();
  p.log_pow.assign(deg + 1, std::vector<std::uint32_t>(p.q, 0));
  for (int k = 1; k <= deg; ++k) {
    for (std::uint32_t x = 1; x < p.q; ++x) {
      p.log_pow[k][x] = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(k) * p.log[x]) % p.ord);
    }
  }
  p.top.assign(p.q, 0);
  for (std::uint32_t x = 1; x < p.q; ++x) p.top[x] = p.antilog[p.log_pow[deg][x]];

  if (options.mode != SearchMode::kFast) return;
  const WrapParams wp = wrap_params(deg, t);
  for (const auto& fam : offset_families()) {
    if (fam.deg != deg || fam.r != wp.r) continue;
    if (wp.m < fam.min_m && !options.force_filters) continue;
    for (std::uint64_t u : fam.offsets) {
      const std::uint64_t n = wp.m + u;
      if (n < 1 || n > p.q - 2) continue;
      for (int pin = 0; pin <= 1; ++pin) {
        std::map<int, int> fixed;
        if (deg == 6) {
          fixed = {{1, pin}};
        } else {
          fixed = {{1, 0}, {2, pin}};
        }
        SymPoly sp;
        try {
          sp = hermite_symbolic(deg, wp.r, wp.m, u, fixed);
        } catch (const Error& err) {
          if (err.code() == ErrorCode::kWrapOverlap || err.code() == ErrorCode::kInvalidOffset) {
            break;
          }
          throw;
        }
        const std::string label = "u=" + std::to_string(u);
        if (pin == 0) p.labels.push_back(label);
        p.add_filter(pin, compile_filter(sp, deg, p.ord, label));
      }
    }
  }
  for (auto& fs : p.filters) {
    std::stable_sort(fs.begin(), fs.end(), [](const CompiledFilter& x, const CompiledFilter& y) {
      if (x.kind != y.kind) return x.kind < y.kind;
      return x.terms < y.terms;
    });
  }
  if (deg == 6 && t % 2 == 1 && !p.labels.empty()) {
    p.root_prefilter = true;
    p.labels.push_back("single root");
  }
}

SearchPlan::~SearchPlan() = default;

const FieldCtx& SearchPlan::field() const { return impl_->ctx; }
int SearchPlan::degree() const { return impl_->deg; }
std::uint32_t SearchPlan::slice_count() const { return impl_->q; }

SearchPartial SearchPlan::run_slice(std::uint32_t slice) const {
  if (slice >= impl_->q) {
    throw std::out_of_range("slice index out of range");
  }
  return impl_->run(slice);
}

std::vector<std::string> SearchPlan::active_filters() const { return impl_->labels; }

}  // namespace permpoly
