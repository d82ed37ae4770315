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

#ifndef KUNIFORM_ORTHOGONAL_ARRAY_H
#define KUNIFORM_ORTHOGONAL_ARRAY_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kuniform/combinatorics.h"

namespace kuniform {

using Symbol = uint16_t;

/// An r x N array over the symbols {0..d-1}, stored row-major.
///
/// An array with strength k (every k-column subarray contains each k-tuple
/// exactly lambda = r / d^k times) is an OA(r, N, d, k). The declared strength
/// is optional; when given it is verified at construction and never trusted.
class OrthogonalArray {
   public:
    /// Throws Error(kShapeMismatch) if cells.size() != runs * factors,
    /// Error(kSymbolOutOfRange) if a cell is >= levels, and
    /// Error(kParameterMismatch) if a declared strength does not verify.
    OrthogonalArray(
        size_t runs,
        size_t factors,
        uint32_t levels,
        std::vector<Symbol> cells,
        std::optional<size_t> declared_strength = std::nullopt);

    static OrthogonalArray from_rows(
        const std::vector<std::vector<Symbol>> &rows,
        uint32_t levels,
        std::optional<size_t> declared_strength = std::nullopt);

    size_t runs() const {
        return runs_;
    }
    size_t factors() const {
        return factors_;
    }
    uint32_t levels() const {
        return levels_;
    }
    std::optional<size_t> declared_strength() const {
        return declared_strength_;
    }
    /// r / d^k for the declared strength.
    std::optional<uint64_t> declared_index() const;

    Symbol at(size_t row, size_t col) const {
        return cells_[row * factors_ + col];
    }
    std::span<const Symbol> row(size_t i) const {
        return {cells_.data() + i * factors_, factors_};
    }
    const std::vector<Symbol> &cells() const {
        return cells_;
    }
    std::vector<std::vector<Symbol>> rows() const;
    /// Rows in lexicographic order; equal for arrays that differ only by a
    /// row permutation.
    std::vector<std::vector<Symbol>> sorted_rows() const;

    bool operator==(const OrthogonalArray &other) const;

   private:
    size_t runs_;
    size_t factors_;
    uint32_t levels_;
    std::vector<Symbol> cells_;
    std::optional<size_t> declared_strength_;
};

bool same_row_set(const OrthogonalArray &a, const OrthogonalArray &b);

/// True iff every k-subset of columns contains each k-tuple exactly r / d^k
/// times. k = 0 is vacuously true; k > N is false.
bool verify_strength(const OrthogonalArray &a, size_t k);

/// Largest k with verify_strength(a, k).
size_t max_strength(const OrthogonalArray &a);

/// r / d^k. Throws Error(kNotAnOAAtStrength) when a is not of strength k.
uint64_t oa_index(const OrthogonalArray &a, size_t k);

struct RedundancyWitness {
    ColumnSet removed_columns;
    size_t first_row;
    size_t second_row;
};

struct IrredundancyResult {
    bool irredundant;
    /// Set when irredundant is false: the lexicographically smallest removed
    /// column set whose remaining columns repeat a row, with the first
    /// repeated row pair found in row order.
    std::optional<RedundancyWitness> witness;
};

/// Checks that removing any k columns leaves r pairwise distinct rows.
IrredundancyResult is_irredundant(const OrthogonalArray &a, size_t k);

/// True iff r equals the Rao lower bound for (N, d, max_strength(a)).
bool is_tight(const OrthogonalArray &a);

/// Drops the given columns. Throws Error(kEmptyResult) if nothing is left and
/// Error(kInvalidArgument) for out-of-range columns.
OrthogonalArray remove_columns(const OrthogonalArray &a, std::span<const size_t> columns);

/// Rows starting with `symbol`, first column dropped: OA(r/d, N-1, d, k-1).
OrthogonalArray derive(const OrthogonalArray &a, Symbol symbol);

/// Stacks arrays with equal (N, d). The result's strength is checked to be at
/// least the minimum input strength.
OrthogonalArray juxtapose(std::span<const OrthogonalArray> arrays);

/// Given d arrays with identical (r, N, d) and a common strength k, prefixes
/// the rows of the i-th array with symbol i: OA(dr, N+1, d, k).
OrthogonalArray extend_with_symbol(std::span<const OrthogonalArray> arrays);

/// Row i of the result is row order[i] of the input.
OrthogonalArray permute_rows(const OrthogonalArray &a, std::span<const size_t> order);
/// Column j of the result is column order[j] of the input.
OrthogonalArray permute_columns(const OrthogonalArray &a, std::span<const size_t> order);
/// Cell (i, j) becomes maps[j][cell]; one permutation of {0..d-1} per column.
OrthogonalArray permute_levels(const OrthogonalArray &a, std::span<const std::vector<Symbol>> maps);

}  // namespace kuniform

#endif
