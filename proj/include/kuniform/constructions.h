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

#ifndef KUNIFORM_CONSTRUCTIONS_H
#define KUNIFORM_CONSTRUCTIONS_H

#include <cstdint>

#include "kuniform/orthogonal_array.h"
#include "kuniform/pure_state.h"

namespace kuniform {

/// OA(d^n, (d^n - 1)/(d - 1), d, 2) over GF(d).
///
/// Row x runs over GF(d)^n in encoding order (coordinate 0 is the low digit);
/// column c runs over the nonzero vectors whose first nonzero coordinate is 1,
/// in encoding order. Cell = x . c. Needs n >= 2 and d^n <= 2^14
/// (Error(kParameterViolation)); Error(kNotPrimePower) for bad d.
OrthogonalArray rao_oa(uint32_t d, uint32_t n);

/// OA(d^k, d + 1, d, k) of index unity from polynomials of degree < k.
///
/// Row = coefficient vector (c_0 low digit). Column j < d holds phi(e_j) for
/// the j-th field element; column d holds c_{k-1}. Needs k >= 1, d >= k - 1
/// and d^k <= 2^14 (Error(kParameterViolation)).
OrthogonalArray bush_oa(uint32_t d, uint32_t k);

/// OA(d^3, d + 2, d, 3) for d a power of two (Error(kNotPowerOfTwo)).
/// Row (a, b, c) has a e^2 + b e + c in column j for the j-th element e, then
/// a, then b.
OrthogonalArray bush_extended_oa(uint32_t d);

/// Hadamard order used for an N-qubit 2-uniform state. N >= 6
/// (Error(kUnsupported) otherwise).
size_t choose_hadamard_order(size_t n);

/// The OA behind hadamard_two_uniform_state: first N columns of the
/// normalized order-kappa Hadamard OA.
OrthogonalArray hadamard_two_uniform_oa(size_t n);

/// The state of hadamard_two_uniform_oa(n) with all phases +1.
PureState hadamard_two_uniform_state(size_t n);

}  // namespace kuniform

#endif
