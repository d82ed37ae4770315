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

#ifndef KUNIFORM_CATALOG_H
#define KUNIFORM_CATALOG_H

#include <string>

#include "kuniform/orthogonal_array.h"

namespace kuniform {

/// Parses the catalog text format:
///
///   # optional comments
///   oa r N d [k]
///   0110
///   1 0 1 0     (whitespace inside a row is ignored)
///
/// Symbols are base-36 digits 0-9, a-z. A declared k is re-verified.
/// Throws ParseError (1-based line/column) and Error(kParameterMismatch).
OrthogonalArray parse_oa_file(const std::string &text);

/// Canonical text: header with the declared strength (or the verified
/// maximum strength when none was declared) followed by one row per line.
std::string write_oa_file(const OrthogonalArray &a);

/// Base-36 digit for a symbol < 36.
char symbol_char(Symbol s);

}  // namespace kuniform

#endif
