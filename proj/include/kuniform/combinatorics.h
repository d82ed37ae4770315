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

#ifndef KUNIFORM_COMBINATORICS_H
#define KUNIFORM_COMBINATORICS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace kuniform {

using ColumnSet = std::vector<size_t>;

/// C(n, k) as an exact integer. Throws Error(kInvalidArgument) on overflow.
uint64_t binomial(uint64_t n, uint64_t k);

/// base^exponent. Throws Error(kInvalidArgument) on overflow.
uint64_t checked_pow(uint64_t base, uint64_t exponent);

/// Calls `visit` on every k-subset of {0..n-1} in lexicographic order. The
/// visitor returns false to stop early.
void for_each_subset(size_t n, size_t k, const std::function<bool(const ColumnSet &)> &visit);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<ColumnSet> all_subsets(size_t n, size_t k);

/// {0..n-1} minus `subset`, ascending.
ColumnSet complement(size_t n, std::span<const size_t> subset);

}  // namespace kuniform

#endif
