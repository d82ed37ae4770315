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

#ifndef KUNIFORM_TESTS_DENSE_ORACLE_H
#define KUNIFORM_TESTS_DENSE_ORACLE_H

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "kuniform/combinatorics.h"
#include "kuniform/pure_state.h"
#include "kuniform/reduction.h"

namespace kuniform::testing {

/// Reduced matrix via the full d^N amplitude vector: rho[a][a'] is the sum
/// over environment basis states b of <a b|psi><psi|a' b>, divided by the
/// term count. Small states materialize |psi><psi| and sum its entries.
inline std::vector<std::complex<double>> dense_reduce(const PureState &s, const ColumnSet &keep) {
    const size_t n = s.qudits();
    const size_t d = s.levels();
    size_t full = 1;
    for (size_t i = 0; i < n; i++) {
        full *= d;
    }
    std::vector<std::complex<double>> psi(full);
    for (const auto &t : s.terms()) {
        size_t idx = 0;
        for (Symbol x : t.word) {
            idx = idx * d + x;
        }
        psi[idx] = t.phase;
    }
    ColumnSet drop = complement(n, keep);
    size_t dim_a = 1;
    size_t dim_b = 1;
    for (size_t i = 0; i < keep.size(); i++) {
        dim_a *= d;
    }
    for (size_t i = 0; i < drop.size(); i++) {
        dim_b *= d;
    }
    // Position of basis state (a, b) in the full vector, at [a * dim_b + b].
    std::vector<size_t> joint(full);
    for (size_t a = 0; a < dim_a; a++) {
        for (size_t b = 0; b < dim_b; b++) {
            std::vector<size_t> word(n);
            size_t x = a;
            for (size_t i = keep.size(); i-- > 0;) {
                word[keep[i]] = x % d;
                x /= d;
            }
            x = b;
            for (size_t i = drop.size(); i-- > 0;) {
                word[drop[i]] = x % d;
                x /= d;
            }
            size_t idx = 0;
            for (size_t w : word) {
                idx = idx * d + w;
            }
            joint[a * dim_b + b] = idx;
        }
    }
    std::vector<std::complex<double>> outer;
    if (full <= 729) {
        outer.resize(full * full);
        for (size_t i = 0; i < full; i++) {
            for (size_t j = 0; j < full; j++) {
                outer[i * full + j] = psi[i] * std::conj(psi[j]);
            }
        }
    }
    std::vector<std::complex<double>> rho(dim_a * dim_a);
    const double norm = 1.0 / (double)s.size();
    for (size_t a = 0; a < dim_a; a++) {
        for (size_t a2 = 0; a2 < dim_a; a2++) {
            std::complex<double> acc = 0;
            for (size_t b = 0; b < dim_b; b++) {
                size_t i = joint[a * dim_b + b];
                size_t j = joint[a2 * dim_b + b];
                acc += outer.empty() ? psi[i] * std::conj(psi[j]) : outer[i * full + j];
            }
            rho[a * dim_a + a2] = acc * norm;
        }
    }
    return rho;
}

/// Random state with N <= 10, d <= 3 and at most 32 distinct terms.
inline PureState random_sparse_state(std::mt19937_64 &rng) {
    size_t n = 2 + rng() % 9;
    uint32_t d = 2 + (uint32_t)(rng() % 2);
    size_t full = 1;
    for (size_t i = 0; i < n; i++) {
        full *= d;
    }
    size_t r = 1 + rng() % std::min<size_t>(32, full);
    std::vector<size_t> picks;
    while (picks.size() < r) {
        size_t v = rng() % full;
        if (std::find(picks.begin(), picks.end(), v) == picks.end()) {
            picks.push_back(v);
        }
    }
    std::uniform_real_distribution<double> angle(0, 6.283185307179586);
    std::vector<Term> terms;
    for (size_t v : picks) {
        Word w(n);
        for (size_t i = n; i-- > 0;) {
            w[i] = (Symbol)(v % d);
            v /= d;
        }
        Phase ph = rng() % 2 ? std::polar(1.0, angle(rng)) : Phase(rng() % 2 ? 1.0 : -1.0);
        terms.push_back(Term{std::move(w), ph});
    }
    return PureState(n, d, std::move(terms));
}

/// Random nonempty proper subset, increasing, with d^|keep| within the
/// reduction cap.
inline ColumnSet random_keep(std::mt19937_64 &rng, size_t n, uint32_t d = 2) {
    auto fits = [&](size_t m) {
        size_t dim = 1;
        for (size_t i = 0; i < m; i++) {
            dim *= d;
        }
        return dim <= kMaxReducedDim;
    };
    ColumnSet keep;
    while (keep.empty() || keep.size() == n || !fits(keep.size())) {
        keep.clear();
        for (size_t i = 0; i < n; i++) {
            if (rng() % 2) {
                keep.push_back(i);
            }
        }
    }
    return keep;
}

}  // namespace kuniform::testing

#endif
