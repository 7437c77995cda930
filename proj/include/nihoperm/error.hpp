// Copyright 2026 The nihoperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nihoperm {

enum class ErrorCode {
  kInvalidArgument,
  kReduciblePolynomial,
  kContextMismatch,
  kDivisionByZero,
  kDegreeMismatch,
  kNotInvertible,
  kDenominatorVanished,
  kNotOnCircle,
  kZeroCoefficient,
  kRelationViolated,
  kFieldTooSmall,
  kDomainTooLarge,
  kBadFactorization,
  kParseError,
};

constexpr std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::kContextMismatch: return "ContextMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kDenominatorVanished: return "DenominatorVanished";
    case ErrorCode::kNotOnCircle: return "NotOnCircle";
    case ErrorCode::kZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::kRelationViolated: return "RelationViolated";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kDomainTooLarge: return "DomainTooLarge";
    case ErrorCode::kBadFactorization: return "BadFactorization";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nihoperm
