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

#include "permpoly/report_json.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "permpoly/error.hpp"

namespace permpoly {

std::string modulus_hex(std::uint32_t modulus) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%X", modulus);
  return buf;
}

std::uint32_t parse_modulus_hex(const std::string& text) {
  std::string digits = text;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits = digits.substr(2);
  }
  if (digits.empty() || digits.size() > 8 ||
      digits.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
    throw Error(ErrorCode::kParseError, "bad modulus '" + text + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(digits, nullptr, 16));
}

std::string report_to_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["degree"] = report.degree;
  j["t"] = report.t;
  j["modulus_hex"] = modulus_hex(report.modulus);
  j["mode"] = to_string(report.mode);
  j["candidates_tested"] = report.candidates_tested;
  j["pps_found"] = report.pps_found;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : report.classes) {
    nlohmann::ordered_json jc;
    jc["canonical"] = to_string(c.canonical);
    jc["witness"] = to_string(c.witness);
    jc["count"] = c.count;
    classes.push_back(std::move(jc));
  }
  j["classes"] = std::move(classes);
  nlohmann::ordered_json diff;
  diff["missing"] = report.table_diff.missing;
  diff["extra"] = report.table_diff.extra;
  j["table_diff"] = std::move(diff);
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump(2);
}

std::string report_to_text(const ClassificationReport& report) {
  std::ostringstream os;
  os << "degree " << report.degree << " over GF(2^" << report.t << "), modulus "
     << modulus_hex(report.modulus) << ", mode " << to_string(report.mode) << "\n";
  os << "candidates tested: " << report.candidates_tested << "\n";
  if (report.mode == SearchMode::kFast) {
    os << "rejected by filters: " << report.filtered;
    if (!report.active_filters.empty()) {
      os << " (";
      for (std::size_t i = 0; i < report.active_filters.size(); ++i) {
        os << (i ? ", " : "") << report.active_filters[i];
      }
      os << ")";
    }
    os << "\n";
  }
  os << "PPs found: " << report.pps_found << "\n";
  os << "classes: " << report.classes.size() << "\n";
  for (const auto& c : report.classes) {
    os << "  " << to_string(c.canonical) << "  [witness " << to_string(c.witness) << ", "
       << c.count << " PPs]\n";
  }
  if (report.table_diff.empty()) {
    os << "expected table: match\n";
  } else {
    for (const auto& m : report.table_diff.missing) os << "  missing: " << m << "\n";
    for (const auto& e : report.table_diff.extra) os << "  extra:   " << e << "\n";
  }
  os << "elapsed: " << report.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace permpoly
