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

#include "permpoly/error.hpp"

namespace permpoly {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kModulusNotIrreducible: return "ModulusNotIrreducible";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::kPartitionMismatch: return "PartitionMismatch";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kInvalidOffset: return "InvalidOffset";
    case ErrorCode::kWrapOverlap: return "WrapOverlap";
    case ErrorCode::kUnboundVariable: return "UnboundVariable";
    case ErrorCode::kNonMonicDivisor: return "NonMonicDivisor";
    case ErrorCode::kUnsupportedShape: return "UnsupportedShape";
    case ErrorCode::kSearchTooLarge: return "SearchTooLarge";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace permpoly
