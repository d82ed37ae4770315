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

#include "kuniform/reduction.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "kuniform/error.h"
#include "kuniform/hermitian_eigen.h"

namespace kuniform {

DensityMatrix::DensityMatrix(size_t dim, ColumnSet keep, std::vector<std::complex<double>> entries)
    : dim_(dim), keep_(std::move(keep)), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw Error(ErrorCode::kShapeMismatch, "density matrix entries do not match dimension");
    }
}

std::complex<double> DensityMatrix::trace() const {
    std::complex<double> t = 0;
    for (size_t i = 0; i < dim_; i++) {
        t += at(i, i);
    }
    return t;
}

DensityMatrix reduce(const PureState &state, const ColumnSet &keep) {
    const size_t n = state.qudits();
    if (keep.empty() || keep.size() >= n) {
        std::stringstream ss;
        ss << "kept set must be a nonempty proper subset of " << n << " qudits";
        throw Error(ErrorCode::kBadSubset, ss.str());
    }
    for (size_t i = 0; i < keep.size(); i++) {
        if (keep[i] >= n || (i > 0 && keep[i] <= keep[i - 1])) {
            throw Error(ErrorCode::kBadSubset, "kept columns must be increasing and in range");
        }
    }
    const uint64_t d = state.levels();
    uint64_t dim = 1;
    for (size_t i = 0; i < keep.size(); i++) {
        dim *= d;
        if (dim > kMaxReducedDim) {
            std::stringstream ss;
            ss << "reduction to " << keep.size() << " qudits of dimension " << d << " exceeds " << kMaxReducedDim;
            throw Error(ErrorCode::kReductionTooLarge, ss.str());
        }
    }
    ColumnSet drop = complement(n, keep);

    // Environment word -> (kept index, phase) of each term with it.
    std::map<Word, std::vector<std::pair<size_t, std::complex<double>>>> groups;
    for (const auto &t : state.terms()) {
        size_t idx = 0;
        for (size_t c : keep) {
            idx = idx * d + t.word[c];
        }
        Word env;
        env.reserve(drop.size());
        for (size_t c : drop) {
            env.push_back(t.word[c]);
        }
        groups[std::move(env)].emplace_back(idx, t.phase);
    }

    std::vector<std::complex<double>> rho(dim * dim);
    const double norm = state.size() == 0 ? 0.0 : 1.0 / (double)state.size();
    for (const auto &[env, members] : groups) {
        for (const auto &[i, pi] : members) {
            for (const auto &[j, pj] : members) {
                rho[i * dim + j] += pi * std::conj(pj) * norm;
            }
        }
    }
    return DensityMatrix(dim, keep, std::move(rho));
}

MixednessCheck is_maximally_mixed(const DensityMatrix &rho, double tol) {
    const double target = 1.0 / (double)rho.dim();
    double dev = 0;
    for (size_t i = 0; i < rho.dim(); i++) {
        for (size_t j = 0; j < rho.dim(); j++) {
            std::complex<double> expected = i == j ? target : 0.0;
            dev = std::max(dev, std::abs(rho.at(i, j) - expected));
        }
    }
    return {dev <= tol, dev};
}

double purity(const DensityMatrix &rho) {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double p = 0;
    for (const auto &v : rho.entries()) {
        p += std::norm(v);
    }
    return p;
}

size_t reduction_rank(const DensityMatrix &rho, double tol) {
    auto eig = hermitian_eigenvalues(rho.entries(), rho.dim());
    return (size_t)std::count_if(eig.begin(), eig.end(), [&](double v) { return v > tol; });
}

}  // namespace kuniform
