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

#include "kuniform/hermitian_eigen.h"

#include <algorithm>
#include <cmath>

#include "kuniform/error.h"

namespace kuniform {

namespace {
constexpr size_t kMaxDim = 64;
constexpr int kMaxSweeps = 100;
}  // namespace

std::vector<double> hermitian_eigenvalues(std::span<const std::complex<double>> matrix, size_t n) {
    using C = std::complex<double>;
    if (n > kMaxDim) {
        throw Error(ErrorCode::kInvalidArgument, "eigensolver supports dimension up to 64");
    }
    if (matrix.size() != n * n) {
        throw Error(ErrorCode::kInvalidArgument, "matrix size does not match dimension");
    }
    // Symmetrize from the upper triangle.
    std::vector<C> a(n * n);
    double scale = 0;
    for (size_t i = 0; i < n; i++) {
        a[i * n + i] = C(matrix[i * n + i].real(), 0);
        for (size_t j = i + 1; j < n; j++) {
            a[i * n + j] = matrix[i * n + j];
            a[j * n + i] = std::conj(matrix[i * n + j]);
        }
    }
    for (const C &v : a) {
        scale = std::max(scale, std::abs(v));
    }
    const double eps = 1e-15 * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        double off = 0;
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                off = std::max(off, std::abs(a[p * n + q]));
            }
        }
        if (off <= eps) {
            break;
        }
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                C apq = a[p * n + q];
                double r = std::abs(apq);
                if (r <= eps) {
                    continue;
                }
                double phi = std::arg(apq);
                double alpha = a[p * n + p].real();
                double beta = a[q * n + q].real();
                double theta = 0.5 * std::atan2(2 * r, beta - alpha);
                double c = std::cos(theta);
                double s = std::sin(theta);
                C rot = std::polar(1.0, -phi);
                C g00 = c;
                C g01 = s;
                C g10 = -s * rot;
                C g11 = c * rot;
                for (size_t k = 0; k < n; k++) {
                    C akp = a[k * n + p];
                    C akq = a[k * n + q];
                    a[k * n + p] = akp * g00 + akq * g10;
                    a[k * n + q] = akp * g01 + akq * g11;
                }
                for (size_t k = 0; k < n; k++) {
                    C apk = a[p * n + k];
                    C aqk = a[q * n + k];
                    a[p * n + k] = std::conj(g00) * apk + std::conj(g10) * aqk;
                    a[q * n + k] = std::conj(g01) * apk + std::conj(g11) * aqk;
                }
                a[p * n + q] = 0;
                a[q * n + p] = 0;
            }
        }
    }
    std::vector<double> out(n);
    for (size_t i = 0; i < n; i++) {
        out[i] = a[i * n + i].real();
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kuniform
