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

#ifndef KUNIFORM_REDUCTION_H
#define KUNIFORM_REDUCTION_H

#include <complex>
#include <vector>

#include "kuniform/combinatorics.h"
#include "kuniform/pure_state.h"

namespace kuniform {

/// Dense d^k x d^k reduced density matrix of the qudits in `keep`.
///
/// Basis index of a kept word: the first kept column is the most significant
/// base-d digit.
class DensityMatrix {
   public:
    DensityMatrix(size_t dim, ColumnSet keep, std::vector<std::complex<double>> entries);

    size_t dim() const {
        return dim_;
    }
    const ColumnSet &keep() const {
        return keep_;
    }
    std::complex<double> at(size_t i, size_t j) const {
        return entries_[i * dim_ + j];
    }
    const std::vector<std::complex<double>> &entries() const {
        return entries_;
    }
    std::complex<double> trace() const;

   private:
    size_t dim_;
    ColumnSet keep_;
    std::vector<std::complex<double>> entries_;
};

/// Largest d^k reduce() will materialize.
constexpr size_t kMaxReducedDim = 1024;

/// Partial trace over the complement of `keep`, normalized by the term count.
/// Terms are grouped by their dropped-coordinate word so only pairs sharing an
/// environment contribute. `keep` must be strictly increasing, nonempty and a
/// proper subset (Error(kBadSubset)); d^k above kMaxReducedDim raises
/// Error(kReductionTooLarge).
DensityMatrix reduce(const PureState &state, const ColumnSet &keep);

struct MixednessCheck {
    bool maximally_mixed;
    /// max entrywise |rho - I/dim|.
    double deviation;
};

MixednessCheck is_maximally_mixed(const DensityMatrix &rho, double tol = 1e-9);

/// Tr(rho^2).
double purity(const DensityMatrix &rho);

/// Eigenvalues above tol. Dimension at most 64.
size_t reduction_rank(const DensityMatrix &rho, double tol = 1e-9);

}  // namespace kuniform

#endif
