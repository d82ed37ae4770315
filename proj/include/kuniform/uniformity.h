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

#ifndef KUNIFORM_UNIFORMITY_H
#define KUNIFORM_UNIFORMITY_H

#include <vector>

#include "kuniform/combinatorics.h"
#include "kuniform/pure_state.h"

namespace kuniform {

struct SubsetStatus {
    /// 0-based kept qudits.
    ColumnSet keep;
    bool maximally_mixed;
    double deviation;
    /// Ascending eigenvalues of failing reductions (empty when passing or when
    /// the reduction is larger than 64).
    std::vector<double> eigenvalues;
};

struct UniformityReport {
    size_t qudits;
    size_t k;
    double tol;
    bool certified;
    /// One entry per k-subset in lexicographic order.
    std::vector<SubsetStatus> subsets;

    size_t failure_count() const;
    double max_deviation() const;
};

/// Checks every k-qudit reduction against I/d^k. Requires 1 <= k <= N-1
/// (Error(kInvalidArgument)).
UniformityReport uniformity(const PureState &state, size_t k, double tol = 1e-9);

/// Like uniformity(...).certified, but stops at the first failing subset.
bool is_k_uniform(const PureState &state, size_t k, double tol = 1e-9);

/// Largest k <= floor(N/2) for which the state is k-uniform, scanning upward
/// from 1 and stopping at the first failure. 0 when even k = 1 fails.
size_t max_uniformity(const PureState &state, double tol = 1e-9);

}  // namespace kuniform

#endif
