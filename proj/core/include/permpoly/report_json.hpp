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

#include <string>

#include "permpoly/classifier.hpp"

namespace permpoly {

// "0xB" style, bit i = coefficient of x^i.
std::string modulus_hex(std::uint32_t modulus);
// Accepts an optional 0x prefix. Throws ParseError.
std::uint32_t parse_modulus_hex(const std::string& text);

// One JSON document with keys degree, t, modulus_hex, mode,
// candidates_tested, pps_found, classes, table_diff, elapsed_ms (in that
// order), pretty printed with two-space indentation.
std::string report_to_json(const ClassificationReport& report);

// Human-readable multi-line summary.
std::string report_to_text(const ClassificationReport& report);

}  // namespace permpoly
