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

#include "kuniform/uniformity.h"

#include <algorithm>
#include <sstream>

#include "kuniform/error.h"
#include "kuniform/hermitian_eigen.h"
#include "kuniform/reduction.h"

namespace kuniform {

namespace {
void check_k(const PureState &state, size_t k) {
    if (k < 1 || k >= state.qudits()) {
        std::stringstream ss;
        ss << "k must lie in [1, N-1] for N=" << state.qudits() << ", got " << k;
        throw Error(ErrorCode::kInvalidArgument, ss.str());
    }
}
}  // namespace

size_t UniformityReport::failure_count() const {
    return (size_t)std::count_if(subsets.begin(), subsets.end(), [](const SubsetStatus &s) {
        return !s.maximally_mixed;
    });
}

double UniformityReport::max_deviation() const {
    double dev = 0;
    for (const auto &s : subsets) {
        dev = std::max(dev, s.deviation);
    }
    return dev;
}

UniformityReport uniformity(const PureState &state, size_t k, double tol) {
    check_k(state, k);
    UniformityReport report{state.qudits(), k, tol, true, {}};
    for_each_subset(state.qudits(), k, [&](const ColumnSet &keep) {
        DensityMatrix rho = reduce(state, keep);
        MixednessCheck m = is_maximally_mixed(rho, tol);
        SubsetStatus status{keep, m.maximally_mixed, m.deviation, {}};
        if (!m.maximally_mixed) {
            report.certified = false;
            if (rho.dim() <= 64) {
                status.eigenvalues = hermitian_eigenvalues(rho.entries(), rho.dim());
            }
        }
        report.subsets.push_back(std::move(status));
        return true;
    });
    return report;
}

bool is_k_uniform(const PureState &state, size_t k, double tol) {
    check_k(state, k);
    bool ok = true;
    for_each_subset(state.qudits(), k, [&](const ColumnSet &keep) {
        ok = is_maximally_mixed(reduce(state, keep), tol).maximally_mixed;
        return ok;
    });
    return ok;
}

size_t max_uniformity(const PureState &state, double tol) {
    size_t best = 0;
    for (size_t k = 1; k <= state.qudits() / 2; k++) {
        if (!is_k_uniform(state, k, tol)) {
            break;
        }
        best = k;
    }
    return best;
}

}  // namespace kuniform
