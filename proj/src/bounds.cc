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

#include "kuniform/bounds.h"

#include <cmath>
#include <sstream>

#include "kuniform/combinatorics.h"
#include "kuniform/error.h"

namespace kuniform {

namespace {

uint64_t checked_add(uint64_t a, uint64_t b) {
    if (a > UINT64_MAX - b) {
        throw Error(ErrorCode::kInvalidArgument, "bound overflows 64 bits");
    }
    return a + b;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) {
        throw Error(ErrorCode::kInvalidArgument, "bound overflows 64 bits");
    }
    return a * b;
}

}  // namespace

uint64_t rao_min_runs(uint64_t n, uint64_t d, uint64_t k) {
    if (n < 1 || d < 2 || k > n) {
        std::stringstream ss;
        ss << "Rao bound needs N >= 1, d >= 2, 0 <= k <= N (got N=" << n << ", d=" << d << ", k=" << k << ")";
        throw Error(ErrorCode::kInvalidArgument, ss.str());
    }
    uint64_t total = 0;
    uint64_t half = k / 2;
    for (uint64_t i = 0; i <= half; i++) {
        total = checked_add(total, checked_mul(binomial(n, i), checked_pow(d - 1, i)));
    }
    if (k % 2 == 1) {
        total = checked_add(total, checked_mul(binomial(n - 1, half), checked_pow(d - 1, half)));
    }
    return total;
}

BoundReport rao_report(uint64_t n, uint64_t d, uint64_t k, std::optional<uint64_t> runs) {
    BoundReport report{n, d, k, rao_min_runs(n, d, k), std::nullopt};
    if (runs.has_value()) {
        report.tight = *runs == report.min_runs;
    }
    return report;
}

uint64_t singleton_max_k(uint64_t n) {
    return n / 2;
}

bool qecc_gv_holds(uint64_t n, uint64_t code_dim, uint64_t distance) {
    if (code_dim == 0 || distance == 0) {
        throw Error(ErrorCode::kInvalidArgument, "code dimension and distance must be positive");
    }
    // Compare sum * K <= 2^N in 128-bit arithmetic.
    unsigned __int128 sum = 0;
    for (uint64_t j = 0; j + 1 <= distance && j <= n; j++) {
        unsigned __int128 term = binomial(n, j);
        for (uint64_t t = 0; t < j; t++) {
            term *= 3;
        }
        sum += term;
    }
    if (n >= 127) {
        return true;
    }
    unsigned __int128 rhs = (unsigned __int128)1 << n;
    return sum * code_dim <= rhs;
}

bool gv_holds(uint64_t n, uint64_t k) {
    return qecc_gv_holds(n, 1, k + 1);
}

bool qecc_singleton_holds(uint64_t n, uint64_t code_dim, uint64_t distance, uint64_t log_base) {
    if (code_dim == 0 || distance == 0 || log_base < 2) {
        throw Error(ErrorCode::kInvalidArgument, "need K >= 1, D >= 1 and a logarithm base >= 2");
    }
    // Exact when K is a power of the base; otherwise compare in floating point.
    uint64_t power = 0;
    uint64_t rest = code_dim;
    while (rest % log_base == 0) {
        rest /= log_base;
        power++;
    }
    const double rhs = 2.0 * (double)(distance - 1);
    if (rest == 1) {
        return (double)n - (double)power >= rhs;
    }
    double log_k = std::log((double)code_dim) / std::log((double)log_base);
    return (double)n - log_k >= rhs - 1e-12;
}

namespace {
// Sign of N - d^(K-D+1): -1, 0 or +1.
int compare_with_singleton(uint64_t n, uint64_t code_dim, uint64_t distance, uint64_t d) {
    if (d < 2) {
        throw Error(ErrorCode::kInvalidArgument, "classical Singleton bound needs d >= 2");
    }
    int64_t e = (int64_t)code_dim - (int64_t)distance + 1;
    if (e < 0) {
        return n >= 1 ? 1 : -1;
    }
    uint64_t bound = 1;
    for (int64_t i = 0; i < e; i++) {
        if (bound > n) {
            return -1;
        }
        bound *= d;
    }
    if (n < bound) {
        return -1;
    }
    return n == bound ? 0 : 1;
}
}  // namespace

bool cecc_singleton_holds(uint64_t n, uint64_t code_dim, uint64_t distance, uint64_t d) {
    return compare_with_singleton(n, code_dim, distance, d) <= 0;
}

bool cecc_is_mds(uint64_t n, uint64_t code_dim, uint64_t distance, uint64_t d) {
    return compare_with_singleton(n, code_dim, distance, d) == 0;
}

}  // namespace kuniform
