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

#ifndef KUNIFORM_PURE_STATE_H
#define KUNIFORM_PURE_STATE_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kuniform/orthogonal_array.h"

namespace kuniform {

using Phase = std::complex<double>;
using Word = std::vector<Symbol>;

struct Term {
    Word word;
    Phase phase;

    bool operator==(const Term &other) const = default;
};

/// An unnormalized N-qudit state sum_i phase_i |word_i> over distinct words
/// with unit-modulus phases. Terms are kept sorted by word.
class PureState {
   public:
    /// Throws Error(kShapeMismatch) for a word of the wrong length,
    /// Error(kSymbolOutOfRange) for a symbol >= levels, Error(kDuplicateRows)
    /// for a repeated word, and Error(kInvalidArgument) for a phase whose
    /// modulus is off by more than 1e-12.
    PureState(size_t qudits, uint32_t levels, std::vector<Term> terms);

    size_t qudits() const {
        return qudits_;
    }
    uint32_t levels() const {
        return levels_;
    }
    size_t size() const {
        return terms_.size();
    }
    const std::vector<Term> &terms() const {
        return terms_;
    }
    const Term &term(size_t i) const {
        return terms_[i];
    }

    /// True when every phase equals the first one (within 1e-12).
    bool all_phases_equal() const;

    bool operator==(const PureState &other) const;

   private:
    size_t qudits_;
    uint32_t levels_;
    std::vector<Term> terms_;
};

/// Phase (-1)^bit for each entry.
std::vector<Phase> signs_to_phases(std::span<const uint8_t> bits);

/// Row i becomes term i with phase phases[i] (default +1). Throws
/// Error(kDuplicateRows) and Error(kPhaseLengthMismatch).
PureState state_from_oa(const OrthogonalArray &a, std::optional<std::span<const Phase>> phases = std::nullopt);

/// Term 0 keeps its phase; term i is multiplied by exp(i angles[i-1]). Throws
/// Error(kLengthMismatch) unless angles.size() == size() - 1.
PureState orbit_state(const PureState &state, std::span<const double> angles);

/// sum_i |i> |parts[i]>: part i gets symbol i prepended. All parts must share
/// N and d, and there can be at most d of them (Error(kShapeMismatch)).
PureState layered_state(std::span<const PureState> parts);

}  // namespace kuniform

#endif
