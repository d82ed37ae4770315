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

#include "kuniform/constructions.h"

#include <sstream>

#include "kuniform/error.h"
#include "kuniform/gf.h"
#include "kuniform/hadamard.h"

namespace kuniform {

namespace {

constexpr uint64_t kMaxRuns = 1u << 14;

uint64_t bounded_pow(uint64_t base, uint64_t exp, const char *what) {
    uint64_t v = 1;
    for (uint64_t i = 0; i < exp; i++) {
        v *= base;
        if (v > kMaxRuns) {
            std::stringstream ss;
            ss << what << ": " << base << "^" << exp << " rows exceeds 2^14";
            throw Error(ErrorCode::kParameterViolation, ss.str());
        }
    }
    return v;
}

std::vector<uint32_t> digits(uint64_t v, uint32_t base, size_t len) {
    std::vector<uint32_t> out(len);
    for (size_t i = 0; i < len; i++) {
        out[i] = (uint32_t)(v % base);
        v /= base;
    }
    return out;
}

}  // namespace

OrthogonalArray rao_oa(uint32_t d, uint32_t n) {
    FiniteField f = FiniteField::create(d);
    if (n < 2) {
        throw Error(ErrorCode::kParameterViolation, "rao_oa needs n >= 2");
    }
    const uint64_t runs = bounded_pow(d, n, "rao_oa");

    std::vector<std::vector<uint32_t>> reps;
    for (uint64_t v = 1; v < runs; v++) {
        auto c = digits(v, d, n);
        for (uint32_t x : c) {
            if (x != 0) {
                if (x == 1) {
                    reps.push_back(std::move(c));
                }
                break;
            }
        }
    }

    std::vector<Symbol> cells;
    cells.reserve(runs * reps.size());
    for (uint64_t v = 0; v < runs; v++) {
        auto x = digits(v, d, n);
        for (const auto &c : reps) {
            uint32_t acc = 0;
            for (uint32_t i = 0; i < n; i++) {
                acc = f.add(acc, f.mul(x[i], c[i]));
            }
            cells.push_back((Symbol)acc);
        }
    }
    return OrthogonalArray(runs, reps.size(), d, std::move(cells), 2);
}

OrthogonalArray bush_oa(uint32_t d, uint32_t k) {
    FiniteField f = FiniteField::create(d);
    if (k < 1 || d + 1 < k) {
        std::stringstream ss;
        ss << "bush_oa needs 1 <= k <= d + 1, got d=" << d << ", k=" << k;
        throw Error(ErrorCode::kParameterViolation, ss.str());
    }
    const uint64_t runs = bounded_pow(d, k, "bush_oa");
    std::vector<Symbol> cells;
    cells.reserve(runs * (d + 1));
    for (uint64_t v = 0; v < runs; v++) {
        auto coef = digits(v, d, k);
        for (uint32_t e = 0; e < d; e++) {
            // Horner from the top coefficient.
            uint32_t acc = 0;
            for (size_t i = k; i-- > 0;) {
                acc = f.add(f.mul(acc, e), coef[i]);
            }
            cells.push_back((Symbol)acc);
        }
        cells.push_back((Symbol)coef[k - 1]);
    }
    return OrthogonalArray(runs, d + 1, d, std::move(cells), k);
}

OrthogonalArray bush_extended_oa(uint32_t d) {
    if (d < 2 || (d & (d - 1)) != 0) {
        std::stringstream ss;
        ss << "bush_extended_oa needs d a power of two, got " << d;
        throw Error(ErrorCode::kNotPowerOfTwo, ss.str());
    }
    FiniteField f = FiniteField::create(d);
    const uint64_t runs = bounded_pow(d, 3, "bush_extended_oa");
    std::vector<Symbol> cells;
    cells.reserve(runs * (d + 2));
    for (uint32_t a = 0; a < d; a++) {
        for (uint32_t b = 0; b < d; b++) {
            for (uint32_t c = 0; c < d; c++) {
                for (uint32_t e = 0; e < d; e++) {
                    uint32_t v = f.add(f.add(f.mul(a, f.mul(e, e)), f.mul(b, e)), c);
                    cells.push_back((Symbol)v);
                }
                cells.push_back((Symbol)a);
                cells.push_back((Symbol)b);
            }
        }
    }
    return OrthogonalArray(runs, d + 2, d, std::move(cells), 3);
}

size_t choose_hadamard_order(size_t n) {
    if (n <= 5) {
        std::stringstream ss;
        ss << "no Hadamard-based 2-uniform state for N=" << n << " (need N >= 6)";
        throw Error(ErrorCode::kUnsupported, ss.str());
    }
    bool gap = false;
    for (size_t p = 8; p <= n; p *= 2) {
        if (n == p || n == p + 1) {
            gap = true;
        }
    }
    if (gap) {
        // N = 2^n or 2^n + 1 never fits a power-of-two window.
        for (size_t kappa = 12;; kappa *= 2) {
            if (kappa / 2 + 2 <= n && n <= kappa - 1) {
                return kappa;
            }
        }
    }
    for (size_t kappa = 8;; kappa *= 2) {
        if (kappa / 2 + 2 <= n && n <= kappa - 1) {
            return kappa;
        }
    }
}

OrthogonalArray hadamard_two_uniform_oa(size_t n) {
    size_t kappa = choose_hadamard_order(n);
    OrthogonalArray full = hadamard_to_oa(normalize(hadamard_of_order(kappa)));
    std::vector<size_t> drop;
    for (size_t c = n; c < full.factors(); c++) {
        drop.push_back(c);
    }
    return remove_columns(full, drop);
}

PureState hadamard_two_uniform_state(size_t n) {
    return state_from_oa(hadamard_two_uniform_oa(n));
}

}  // namespace kuniform
