// Copyright 2026 The zkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zkit/error.hpp"

namespace zkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::NonUnitary: return "NonUnitary";
    case ErrorCode::ZeroExponent: return "ZeroExponent";
    case ErrorCode::WrongResidueClass: return "WrongResidueClass";
    case ErrorCode::NotOrderThree: return "NotOrderThree";
    case ErrorCode::NotAConfiguration: return "NotAConfiguration";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedDim: return "UnsupportedDim";
    case ErrorCode::ZeroManaResource: return "ZeroManaResource";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonUnitNorm: return "NonUnitNorm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
  }
  return "Unknown";
}

}  // namespace zkit
