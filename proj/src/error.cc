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

#include "kuniform/error.h"

#include <sstream>

namespace kuniform {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
        case ErrorCode::kNotPrimePower:
            return "NotPrimePower";
        case ErrorCode::kDivisionByZero:
            return "DivisionByZero";
        case ErrorCode::kFieldMismatch:
            return "FieldMismatch";
        case ErrorCode::kNotAnOAAtStrength:
            return "NotAnOAAtStrength";
        case ErrorCode::kEmptyResult:
            return "EmptyResult";
        case ErrorCode::kSymbolOutOfRange:
            return "SymbolOutOfRange";
        case ErrorCode::kShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::kWrongCount:
            return "WrongCount";
        case ErrorCode::kNotAPermutation:
            return "NotAPermutation";
        case ErrorCode::kBadOrder:
            return "BadOrder";
        case ErrorCode::kNotNormalized:
            return "NotNormalized";
        case ErrorCode::kParameterViolation:
            return "ParameterViolation";
        case ErrorCode::kNotPowerOfTwo:
            return "NotPowerOfTwo";
        case ErrorCode::kUnsupported:
            return "Unsupported";
        case ErrorCode::kDuplicateRows:
            return "DuplicateRows";
        case ErrorCode::kPhaseLengthMismatch:
            return "PhaseLengthMismatch";
        case ErrorCode::kBadSubset:
            return "BadSubset";
        case ErrorCode::kLengthMismatch:
            return "LengthMismatch";
        case ErrorCode::kReductionTooLarge:
            return "ReductionTooLarge";
        case ErrorCode::kOddContributions:
            return "OddContributions";
        case ErrorCode::kUnsupportedMultiplicity:
            return "UnsupportedMultiplicity";
        case ErrorCode::kPhasesPresent:
            return "PhasesPresent";
        case ErrorCode::kParseError:
            return "ParseError";
        case ErrorCode::kParameterMismatch:
            return "ParameterMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

namespace {
std::string located(size_t line, size_t column, const std::string &message) {
    std::stringstream ss;
    ss << "line " << line << ", column " << column << ": " << message;
    return ss.str();
}
}  // namespace

ParseError::ParseError(size_t line, size_t column, const std::string &message)
    : Error(ErrorCode::kParseError, located(line, column, message)), line_(line), column_(column) {
}

}  // namespace kuniform
