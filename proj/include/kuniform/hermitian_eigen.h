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

#ifndef KUNIFORM_HERMITIAN_EIGEN_H
#define KUNIFORM_HERMITIAN_EIGEN_H

#include <complex>
#include <span>
#include <vector>

namespace kuniform {

/// Eigenvalues of an n x n Hermitian matrix (row-major), ascending, by
/// cyclic complex Jacobi rotations. Only the upper triangle is read.
/// Throws Error(kInvalidArgument) if n > 64 or the size does not match.
std::vector<double> hermitian_eigenvalues(std::span<const std::complex<double>> matrix, size_t n);

}  // namespace kuniform

#endif
