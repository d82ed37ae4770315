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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "kuniform/error.h"

using namespace kuniform;

TEST(hermitian_eigen, diagonal_and_small) {
    std::vector<std::complex<double>> diag{3, 0, 0, 0, -1, 0, 0, 0, 2};
    auto ev = hermitian_eigenvalues(diag, 3);
    EXPECT_EQ(ev, (std::vector<double>{-1, 2, 3}));

    // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
    std::vector<std::complex<double>> m{1, {0, 1}, {0, -1}, 1};
    ev = hermitian_eigenvalues(m, 2);
    EXPECT_NEAR(ev[0], 0.0, 1e-14);
    EXPECT_NEAR(ev[1], 2.0, 1e-14);
    EXPECT_THROW(hermitian_eigenvalues(m, 3), Error);
}

TEST(hermitian_eigen, matches_eigen_on_random_matrices) {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 64;
        if (trial < 100) {
            n = 1 + rng() % 12;
        }
        Eigen::MatrixXcd a(n, n);
        for (size_t i = 0; i < n; i++) {
            a(i, i) = g(rng);
            for (size_t j = i + 1; j < n; j++) {
                a(i, j) = {g(rng), g(rng)};
                a(j, i) = std::conj(a(i, j));
            }
        }
        // Degenerate spectra: low-rank projector-like matrices half the time.
        if (trial % 2 == 1) {
            Eigen::MatrixXcd v = Eigen::MatrixXcd::Random(n, std::max<size_t>(1, n / 3));
            a = v * v.adjoint();
        }
        std::vector<std::complex<double>> flat(n * n);
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                flat[i * n + j] = a(i, j);
            }
        }
        auto ours = hermitian_eigenvalues(flat, n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
        auto ref = solver.eigenvalues();
        double scale = std::max(1.0, a.norm());
        for (size_t i = 0; i < n; i++) {
            ASSERT_NEAR(ours[i], ref(i), 1e-10 * scale) << "trial " << trial << " n=" << n;
        }
    }
}
