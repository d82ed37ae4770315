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

#ifndef KUNIFORM_KET_H
#define KUNIFORM_KET_H

#include <optional>
#include <string>

#include "kuniform/pure_state.h"

namespace kuniform {

/// Parses a sum of kets such as "-|00000> +|01111> +e^{i 1.5708}|10011>".
///
/// Each term is an optional sign (optional on the first term), an optional
/// phase tag e^{i THETA}, then |word> with base-36 digits. Whitespace is
/// ignored and '#' starts a comment running to the end of the line. The level
/// count defaults to max(2, largest symbol + 1) unless `levels` is given.
/// Throws ParseError with a 1-based line/column.
PureState parse_ket(const std::string &text, std::optional<uint32_t> levels = std::nullopt);

/// Canonical form: terms in word order separated by single spaces, each
/// "+|w>", "-|w>" or "+e^{i THETA}|w>", followed by a newline.
std::string write_ket(const PureState &state);

}  // namespace kuniform

#endif
