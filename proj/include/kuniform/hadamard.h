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

#ifndef KUNIFORM_HADAMARD_H
#define KUNIFORM_HADAMARD_H

#include <cstdint>
#include <vector>

#include "kuniform/orthogonal_array.h"

namespace kuniform {

/// A kappa x kappa matrix of +1/-1 entries with H H^T = kappa I.
class HadamardMatrix {
   public:
    /// Entries are row-major. Throws Error(kShapeMismatch) on a size mismatch
    /// and Error(kInvalidArgument) if an entry is not +-1 or the rows are not
    /// orthogonal.
    HadamardMatrix(size_t order, std::vector<int8_t> entries);

    size_t order() const {
        return order_;
    }
    int at(size_t row, size_t col) const {
        return entries_[row * order_ + col];
    }
    const std::vector<int8_t> &entries() const {
        return entries_;
    }
    /// First row and first column all +1.
    bool is_normalized() const;

    bool operator==(const HadamardMatrix &other) const {
        return order_ == other.order_ && entries_ == other.entries_;
    }

   private:
    size_t order_;
    std::vector<int8_t> entries_;
};

/// Exact integer check of H H^T = n I for a row-major +-1 grid.
bool is_hadamard(size_t order, const std::vector<int8_t> &entries);

/// Order 2^m by repeated doubling [[H, H], [H, -H]] starting from [[1]].
/// 1 <= m <= 16.
HadamardMatrix sylvester(unsigned m);

/// Paley type I matrix of order q + 1, normalized. Throws Error(kBadOrder)
/// unless q is a prime with q = 3 (mod 4) and q <= 1000.
HadamardMatrix paley_type1(uint32_t q);

HadamardMatrix kron(const HadamardMatrix &a, const HadamardMatrix &b);

/// Negates rows whose first entry is -1, then columns whose first entry is -1.
HadamardMatrix normalize(const HadamardMatrix &h);

/// Some normalized Hadamard matrix of order kappa, built from Sylvester and
/// Paley blocks: kappa = 2^a (q + 1) with q a prime = 3 (mod 4), largest a
/// first. Throws Error(kUnsupported) when no such factorization exists.
HadamardMatrix hadamard_of_order(size_t kappa);

/// Drops the first column of a normalized matrix and maps -1 -> 0, +1 -> 1,
/// giving an OA(kappa, kappa - 1, 2, 2). Throws Error(kNotNormalized) and
/// Error(kBadOrder) for kappa < 4.
OrthogonalArray hadamard_to_oa(const HadamardMatrix &h);

}  // namespace kuniform

#endif
