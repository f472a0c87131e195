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

#include "permpoly_cli/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permpoly/classifier.hpp"
#include "permpoly/digitcomb.hpp"
#include "permpoly/error.hpp"
#include "permpoly/hermite_symbolic.hpp"
#include "permpoly/perm_test.hpp"
#include "permpoly/report_json.hpp"
#include "permpoly/verification.hpp"

namespace permpoly::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for malformed arguments the option parser cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string modulus_poly(std::uint32_t modulus) {
  std::string out;
  for (int i = 31; i >= 0; --i) {
    if (((modulus >> i) & 1U) == 0) continue;
    if (!out.empty()) out += "+";
    out += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

FieldCtx make_field(int t, const std::string& mod) {
  if (mod.empty()) return FieldCtx::create(t);
  return FieldCtx::create(t, parse_modulus_hex(mod));
}

std::map<int, int> parse_pins(const std::vector<std::string>& pins) {
  std::map<int, int> out;
  for (const auto& pin : pins) {
    if (pin.size() != 3 || pin[1] != '=' || (pin[2] != '0' && pin[2] != '1') ||
        var_index(pin[0]) < 1) {
      throw UsageError("bad --pin '" + pin + "', expected VAR=0 or VAR=1");
    }
    out[var_index(pin[0])] = pin[2] - '0';
  }
  return out;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Json suite_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation polynomials of degree 6 and 7 over GF(2^t)", "permpoly"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  bool json = false;
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--workers", workers, "Worker threads for classify (0 = all cores)");
  app.add_flag("--json", json, "Machine-readable output");

  int t = 0;
  std::string mod;

  auto* field = app.add_subcommand("field", "Print field parameters");
  field->add_option("--t", t, "Extension degree")->required();
  field->add_option("--mod", mod, "Modulus as hex, bit i = coefficient of x^i");

  std::string poly;
  std::string method = "exhaustive";
  auto* pptest = app.add_subcommand("pptest", "Test whether a polynomial permutes GF(2^t)");
  pptest->add_option("--t", t, "Extension degree")->required();
  pptest->add_option("--mod", mod, "Modulus as hex");
  pptest->add_option("--poly", poly, "Polynomial literal, e.g. x^6+x^5+a^3*x^3")->required();
  pptest->add_option("--method", method, "exhaustive or hermite")
      ->check(CLI::IsMember({"exhaustive", "hermite"}));

  int deg = 0;
  std::optional<std::uint64_t> r_opt;
  std::uint64_t u = 0;
  std::vector<std::string> pins;
  auto* hsym = app.add_subcommand("hermite-sym", "Symbolic [x^(q-1)] f^(m+u)");
  hsym->add_option("--deg", deg, "Degree, 6 or 7")->required();
  hsym->add_option("--t", t, "Extension degree; m and r follow from 2^t = deg*m + r")->required();
  hsym->add_option("--r", r_opt, "Residue 2^t mod deg (checked)");
  hsym->add_option("--u", u, "Offset")->required();
  hsym->add_option("--pin", pins, "Pin a variable, e.g. a=1 (repeatable)");

  std::string mode = "verify";
  bool force_filters = false;
  auto* cls = app.add_subcommand("classify", "Classify degree-6 or degree-7 PPs over GF(2^t)");
  cls->add_option("--deg", deg, "Degree, 6 or 7")->required();
  cls->add_option("--t", t, "Extension degree")->required();
  cls->add_option("--mod", mod, "Modulus as hex");
  cls->add_option("--mode", mode, "verify or fast")->check(CLI::IsMember({"verify", "fast"}));
  cls->add_flag("--force-filters", force_filters,
                "In fast mode, use every exact coefficient filter regardless of field size");

  std::string suite;
  std::optional<int> t_opt;
  int samples = 1000;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "dickson, quintic, identities or tables")
      ->required()
      ->check(CLI::IsMember({"dickson", "quintic", "identities", "tables"}));
  ver->add_option("--t", t_opt, "Restrict to one extension degree");
  ver->add_option("--samples", samples, "Samples for the identities suite");
  ver->add_option("--mode", mode, "Search mode for the tables suite")
      ->check(CLI::IsMember({"verify", "fast"}));

  std::uint64_t n = 0;
  std::vector<std::uint64_t> parts;
  std::uint64_t p = 2;
  auto* lucas = app.add_subcommand("lucas", "Multinomial coefficient mod p by digits");
  lucas->add_option("--n", n, "Top")->required();
  lucas->add_option("--parts", parts, "Comma-separated parts")->required()->delimiter(',');
  lucas->add_option("--p", p, "Prime modulus");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(field)) {
      const FieldCtx ctx = make_field(t, mod);
      if (json) {
        Json j;
        j["t"] = ctx.degree();
        j["q"] = ctx.order();
        j["modulus_hex"] = modulus_hex(ctx.modulus());
        j["modulus"] = modulus_poly(ctx.modulus());
        j["generator_hex"] = modulus_hex(ctx.generator().bits);
        j["mu"] = ctx.display(ctx.trace_one());
        out << j.dump(2) << "\n";
      } else {
        out << "t: " << ctx.degree() << "\n"
            << "q: " << ctx.order() << "\n"
            << "modulus: " << modulus_hex(ctx.modulus()) << " (" << modulus_poly(ctx.modulus())
            << ")\n"
            << "generator a: " << modulus_hex(ctx.generator().bits) << "\n"
            << "mu (least element of trace 1): " << ctx.display(ctx.trace_one()) << " ("
            << modulus_hex(ctx.trace_one().bits) << ")\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(pptest)) {
      const FieldCtx ctx = make_field(t, mod);
      const FieldPoly f = parse_poly(ctx, poly);
      const PermVerdict v = method == "hermite" ? hermite_dickson_test(f) : is_pp_exhaustive(f);
      if (json) {
        Json j;
        j["poly"] = to_string(f);
        j["t"] = t;
        j["method"] = method;
        j["is_pp"] = v.is_pp;
        j["verdict"] = describe(v, ctx);
        out << j.dump(2) << "\n";
      } else {
        out << to_string(f) << " over GF(2^" << t << "), " << method << ": " << describe(v, ctx)
            << "\n";
      }
      return v.is_pp ? kExitOk : kExitFail;
    }

    if (app.got_subcommand(hsym)) {
      const WrapParams wp = wrap_params(deg, t);
      if (r_opt && *r_opt != wp.r) {
        throw UsageError("--r " + std::to_string(*r_opt) + " does not match 2^" +
                         std::to_string(t) + " mod " + std::to_string(deg) + " = " +
                         std::to_string(wp.r));
      }
      const auto fixed = parse_pins(pins);
      const SymPoly sp = hermite_symbolic(deg, wp.r, wp.m, u, fixed);
      if (json) {
        Json j;
        j["deg"] = deg;
        j["t"] = t;
        j["m"] = wp.m;
        j["r"] = wp.r;
        j["u"] = u;
        j["poly"] = to_string(sp);
        out << j.dump(2) << "\n";
      } else {
        out << to_string(sp) << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(cls)) {
      ClassifyOptions opts;
      opts.mode = parse_search_mode(mode);
      opts.workers = workers;
      opts.force_filters = force_filters;
      if (!mod.empty()) opts.modulus = parse_modulus_hex(mod);
      const ClassificationReport report = classify(deg, t, opts);
      out << (json ? report_to_json(report) + "\n" : report_to_text(report));
      return verify_expected_table(report).pass() ? kExitOk : kExitFail;
    }

    if (app.got_subcommand(ver)) {
      std::vector<SuiteResult> results;
      if (suite == "dickson") {
        const std::vector<int> ts = t_opt ? std::vector<int>{*t_opt} : std::vector<int>{3, 4, 5, 6, 7};
        for (int tt : ts) results.push_back(verify_dickson_restrictions(tt, seed, workers));
      } else if (suite == "quintic") {
        const std::vector<int> ts = t_opt ? std::vector<int>{*t_opt} : std::vector<int>{3, 5, 7, 9, 11};
        for (int tt : ts) results.push_back(verify_quintic_lemma(tt));
      } else if (suite == "identities") {
        results.push_back(verify_proof_identities(seed, samples));
      } else if (t_opt) {
        ClassifyOptions opts;
        opts.mode = parse_search_mode(mode);
        opts.workers = workers;
        for (int d : {6, 7}) results.push_back(verify_expected_table(classify(d, *t_opt, opts)));
      } else {
        results.push_back(verify_expected_tables(workers));
      }
      bool pass = true;
      Json arr = Json::array();
      for (const auto& r : results) {
        pass = pass && r.pass();
        if (json) {
          arr.push_back(suite_json(r));
        } else {
          out << to_string(r);
        }
      }
      if (json) out << arr.dump(2) << "\n";
      return pass ? kExitOk : kExitFail;
    }

    if (app.got_subcommand(lucas)) {
      if (!is_prime(p)) throw UsageError("--p " + std::to_string(p) + " is not prime");
      const std::uint64_t residue = multinomial_mod_p(n, parts, p);
      if (json) {
        out << Json{{"n", n}, {"parts", parts}, {"p", p}, {"residue", residue}}.dump(2) << "\n";
      } else {
        out << residue << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace permpoly::cli
