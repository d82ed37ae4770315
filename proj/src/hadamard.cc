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

#include "kuniform/hadamard.h"

#include <sstream>

#include "kuniform/error.h"
#include "kuniform/gf.h"

namespace kuniform {

bool is_hadamard(size_t order, const std::vector<int8_t> &entries) {
    if (order == 0 || entries.size() != order * order) {
        return false;
    }
    for (int8_t e : entries) {
        if (e != 1 && e != -1) {
            return false;
        }
    }
    for (size_t i = 0; i < order; i++) {
        for (size_t j = i; j < order; j++) {
            int64_t dot = 0;
            for (size_t c = 0; c < order; c++) {
                dot += entries[i * order + c] * entries[j * order + c];
            }
            if (dot != (i == j ? (int64_t)order : 0)) {
                return false;
            }
        }
    }
    return true;
}

HadamardMatrix::HadamardMatrix(size_t order, std::vector<int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_) {
        std::stringstream ss;
        ss << "expected " << order_ * order_ << " entries, got " << entries_.size();
        throw Error(ErrorCode::kShapeMismatch, ss.str());
    }
    if (!is_hadamard(order_, entries_)) {
        throw Error(ErrorCode::kInvalidArgument, "rows are not orthogonal +-1 vectors");
    }
}

bool HadamardMatrix::is_normalized() const {
    for (size_t i = 0; i < order_; i++) {
        if (at(0, i) != 1 || at(i, 0) != 1) {
            return false;
        }
    }
    return true;
}

HadamardMatrix sylvester(unsigned m) {
    if (m < 1 || m > 16) {
        throw Error(ErrorCode::kInvalidArgument, "sylvester needs 1 <= m <= 16");
    }
    std::vector<int8_t> cur{1};
    size_t n = 1;
    for (unsigned step = 0; step < m; step++) {
        std::vector<int8_t> next(4 * n * n);
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                int8_t v = cur[i * n + j];
                next[i * 2 * n + j] = v;
                next[i * 2 * n + j + n] = v;
                next[(i + n) * 2 * n + j] = v;
                next[(i + n) * 2 * n + j + n] = (int8_t)-v;
            }
        }
        cur = std::move(next);
        n *= 2;
    }
    return HadamardMatrix(n, std::move(cur));
}

HadamardMatrix paley_type1(uint32_t q) {
    if (q > 1000 || !is_prime(q) || q % 4 != 3) {
        std::stringstream ss;
        ss << "Paley type I needs a prime q = 3 (mod 4) up to 1000, got " << q;
        throw Error(ErrorCode::kBadOrder, ss.str());
    }
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (uint32_t x = 1; x < q; x++) {
        chi[(uint64_t)x * x % q] = 1;
    }
    const size_t n = q + 1;
    std::vector<int8_t> h(n * n);
    // H = I + S with S = [[0, 1^T], [-1, Q]], Q[i][j] = chi(j - i).
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            int s;
            if (i == 0) {
                s = j == 0 ? 0 : 1;
            } else if (j == 0) {
                s = -1;
            } else {
                s = chi[(j - i + q) % q];
            }
            h[i * n + j] = (int8_t)(s + (i == j ? 1 : 0));
        }
    }
    return normalize(HadamardMatrix(n, std::move(h)));
}

HadamardMatrix kron(const HadamardMatrix &a, const HadamardMatrix &b) {
    const size_t na = a.order();
    const size_t nb = b.order();
    const size_t n = na * nb;
    std::vector<int8_t> out(n * n);
    for (size_t i1 = 0; i1 < na; i1++) {
        for (size_t j1 = 0; j1 < na; j1++) {
            for (size_t i2 = 0; i2 < nb; i2++) {
                for (size_t j2 = 0; j2 < nb; j2++) {
                    out[(i1 * nb + i2) * n + j1 * nb + j2] = (int8_t)(a.at(i1, j1) * b.at(i2, j2));
                }
            }
        }
    }
    return HadamardMatrix(n, std::move(out));
}

HadamardMatrix normalize(const HadamardMatrix &h) {
    const size_t n = h.order();
    std::vector<int8_t> e = h.entries();
    for (size_t i = 0; i < n; i++) {
        if (e[i * n] == -1) {
            for (size_t j = 0; j < n; j++) {
                e[i * n + j] = (int8_t)-e[i * n + j];
            }
        }
    }
    for (size_t j = 0; j < n; j++) {
        if (e[j] == -1) {
            for (size_t i = 0; i < n; i++) {
                e[i * n + j] = (int8_t)-e[i * n + j];
            }
        }
    }
    return HadamardMatrix(n, std::move(e));
}

HadamardMatrix hadamard_of_order(size_t kappa) {
    if (kappa < 2) {
        throw Error(ErrorCode::kUnsupported, "no Hadamard construction for order below 2");
    }
    unsigned a = 0;
    size_t rest = kappa;
    while (rest % 2 == 0) {
        rest /= 2;
        a++;
    }
    if (rest == 1) {
        return sylvester(a);
    }
    // Try kappa = 2^b (q + 1), preferring the largest Sylvester factor.
    for (unsigned b = a; b-- > 0;) {
        size_t q = (kappa >> b) - 1;
        if (q <= 1000 && q % 4 == 3 && is_prime(q)) {
            HadamardMatrix p = paley_type1((uint32_t)q);
            return b == 0 ? p : normalize(kron(p, sylvester(b)));
        }
    }
    std::stringstream ss;
    ss << "no Sylvester/Paley construction for order " << kappa;
    throw Error(ErrorCode::kUnsupported, ss.str());
}

OrthogonalArray hadamard_to_oa(const HadamardMatrix &h) {
    if (h.order() < 4) {
        throw Error(ErrorCode::kBadOrder, "Hadamard order must be at least 4");
    }
    if (!h.is_normalized()) {
        throw Error(ErrorCode::kNotNormalized, "first row and column must be all +1");
    }
    const size_t n = h.order();
    std::vector<Symbol> cells;
    cells.reserve(n * (n - 1));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 1; j < n; j++) {
            cells.push_back(h.at(i, j) == 1 ? 1 : 0);
        }
    }
    return OrthogonalArray(n, n - 1, 2, std::move(cells));
}

}  // namespace kuniform
