// Copyright 2026 The kuniform Authors
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

#ifndef KUNIFORM_ERROR_H
#define KUNIFORM_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace kuniform {

/// Machine-readable failure category carried by every `kuniform::Error`.
enum class ErrorCode {
    kInvalidArgument,
    // gf
    kNotPrimePower,
    kDivisionByZero,
    kFieldMismatch,
    // orthogonal arrays
    kNotAnOAAtStrength,
    kEmptyResult,
    kSymbolOutOfRange,
    kShapeMismatch,
    kWrongCount,
    kNotAPermutation,
    // constructions
    kBadOrder,
    kNotNormalized,
    kParameterViolation,
    kNotPowerOfTwo,
    kUnsupported,
    // states
    kDuplicateRows,
    kPhaseLengthMismatch,
    kBadSubset,
    kLengthMismatch,
    kReductionTooLarge,
    // phases
    kOddContributions,
    kUnsupportedMultiplicity,
    // graph
    kPhasesPresent,
    // io
    kParseError,
    kParameterMismatch,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Raised by the catalog and ket parsers. Line and column are 1-based.
class ParseError : public Error {
   public:
    ParseError(size_t line, size_t column, const std::string &message);

    size_t line() const noexcept {
        return line_;
    }
    size_t column() const noexcept {
        return column_;
    }

   private:
    size_t line_;
    size_t column_;
};

}  // namespace kuniform

#endif
