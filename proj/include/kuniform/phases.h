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

#ifndef KUNIFORM_PHASES_H
#define KUNIFORM_PHASES_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kuniform/orthogonal_array.h"
#include "kuniform/pure_state.h"

namespace kuniform {

/// sum_{v in variables} alpha_v = parity (mod 2).
struct SignConstraint {
    std::vector<size_t> variables;
    uint8_t parity;
    /// Where it came from: kept columns and the off-diagonal cell (row < col,
    /// kept-word indices with the first kept column most significant).
    ColumnSet keep;
    size_t cell_row;
    size_t cell_col;
};

struct SignConstraintSystem {
    size_t variables = 0;
    std::vector<SignConstraint> constraints;
};

/// Linear constraints on per-row sign bits that cancel every off-diagonal
/// entry of every k-qudit reduction of state_from_oa(a).
///
/// Requires k <= N/2 (Error(kParameterViolation)), strength k
/// (Error(kNotAnOAAtStrength)) and distinct rows (Error(kDuplicateRows)).
/// A cell fed by an odd number of row pairs raises Error(kOddContributions);
/// one fed by four or more raises Error(kUnsupportedMultiplicity).
SignConstraintSystem constraint_system(const OrthogonalArray &a, size_t k);

/// Gaussian elimination over GF(2), free variables set to 0. When every
/// constraint has an even number of variables, alpha_0 = 0 is imposed as the
/// global-sign gauge. nullopt when inconsistent.
std::optional<std::vector<uint8_t>> solve_signs(const SignConstraintSystem &sys);

bool satisfies(const SignConstraintSystem &sys, std::span<const uint8_t> bits);

enum class FixStatus { kSolved, kInfeasible, kUnsupported };

struct FixResult {
    FixStatus status;
    /// Set when solved: the signed state, already certified k-uniform.
    std::optional<PureState> state;
    /// Sign bits per OA row (1 means -1) when solved.
    std::vector<uint8_t> signs;
    /// True when the answer came from the exhaustive fallback.
    bool exhaustive = false;
    std::string detail;
};

/// Largest run count for which the exhaustive sign search is attempted.
constexpr size_t kMaxExhaustiveRuns = 21;

/// Finds +-1 row signs making state_from_oa(a, signs) k-uniform. Cells with
/// four or more contributing pairs fall back to searching all 2^(r-1) sign
/// vectors with alpha_0 = 0 when r <= kMaxExhaustiveRuns.
FixResult fix_state(const OrthogonalArray &a, size_t k);

}  // namespace kuniform

#endif
