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

#include "kuniform/combinatorics.h"

#include <algorithm>
#include <limits>

#include "kuniform/error.h"

namespace kuniform {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (uint64_t i = 1; i <= k; i++) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<uint64_t>::max()) {
            throw Error(ErrorCode::kInvalidArgument, "binomial coefficient overflows 64 bits");
        }
    }
    return (uint64_t)acc;
}

uint64_t checked_pow(uint64_t base, uint64_t exponent) {
    uint64_t out = 1;
    for (uint64_t i = 0; i < exponent; i++) {
        if (base != 0 && out > std::numeric_limits<uint64_t>::max() / base) {
            throw Error(ErrorCode::kInvalidArgument, "integer power overflows 64 bits");
        }
        out *= base;
    }
    return out;
}

void for_each_subset(size_t n, size_t k, const std::function<bool(const ColumnSet &)> &visit) {
    if (k > n) {
        return;
    }
    ColumnSet s(k);
    for (size_t i = 0; i < k; i++) {
        s[i] = i;
    }
    while (true) {
        if (!visit(s)) {
            return;
        }
        size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) {
            i--;
        }
        if (i == 0) {
            return;
        }
        s[i - 1]++;
        for (size_t j = i; j < k; j++) {
            s[j] = s[j - 1] + 1;
        }
    }
}

std::vector<ColumnSet> all_subsets(size_t n, size_t k) {
    std::vector<ColumnSet> out;
    for_each_subset(n, k, [&](const ColumnSet &s) {
        out.push_back(s);
        return true;
    });
    return out;
}

ColumnSet complement(size_t n, std::span<const size_t> subset) {
    std::vector<bool> in(n, false);
    for (size_t c : subset) {
        if (c < n) {
            in[c] = true;
        }
    }
    ColumnSet out;
    for (size_t c = 0; c < n; c++) {
        if (!in[c]) {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace kuniform
