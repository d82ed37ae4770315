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

#ifndef KUNIFORM_BOUNDS_H
#define KUNIFORM_BOUNDS_H

#include <cstdint>
#include <optional>

namespace kuniform {

/// Rao lower bound on the number of runs of an OA(r, N, d, k).
///
///   k even: sum_{i=0}^{k/2} C(N,i) (d-1)^i
///   k odd:  sum_{i=0}^{(k-1)/2} C(N,i) (d-1)^i + C(N-1,(k-1)/2) (d-1)^{(k-1)/2}
///
/// Requires N >= 1, d >= 2, 0 <= k <= N.
uint64_t rao_min_runs(uint64_t n, uint64_t d, uint64_t k);

struct BoundReport {
    uint64_t n;
    uint64_t d;
    uint64_t k;
    uint64_t min_runs;
    /// Set when the report was made for a concrete array.
    std::optional<bool> tight;
};

BoundReport rao_report(uint64_t n, uint64_t d, uint64_t k, std::optional<uint64_t> runs = std::nullopt);

/// floor(N / 2): no k-uniform state of N qudits exists above it.
uint64_t singleton_max_k(uint64_t n);

/// Quantum Gilbert-Varshamov existence condition for a ((N, K, D))_2 code:
///   sum_{j=0}^{D-1} 3^j C(N,j) <= 2^N / K.
bool qecc_gv_holds(uint64_t n, uint64_t code_dim, uint64_t distance);

/// Gilbert-Varshamov condition for k-uniform qubit states, which are
/// ((N, 1, k+1))_2 codes: sum_{j=0}^{k} 3^j C(N,j) <= 2^N.
bool gv_holds(uint64_t n, uint64_t k);

/// Quantum Singleton bound N - log_base(K) >= 2(D - 1).
bool qecc_singleton_holds(uint64_t n, uint64_t code_dim, uint64_t distance, uint64_t log_base = 2);

/// Classical Singleton-type bound N <= d^(K - D + 1).
bool cecc_singleton_holds(uint64_t n, uint64_t code_dim, uint64_t distance, uint64_t d);
/// Equality case of cecc_singleton_holds.
bool cecc_is_mds(uint64_t n, uint64_t code_dim, uint64_t distance, uint64_t d);

}  // namespace kuniform

#endif
