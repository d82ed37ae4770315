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

#ifndef KUNIFORM_GF_H
#define KUNIFORM_GF_H

#include <cstdint>
#include <memory>
#include <vector>

namespace kuniform {

namespace detail {
struct FieldTables;
}

class FieldElement;

/// The finite field GF(q), q = p^m, q <= 2^16.
///
/// Elements are encoded as integers 0..q-1 whose base-p digits are the
/// coefficients of a polynomial of degree < m (digit i is the coefficient of
/// x^i). The modulus is the lexicographically smallest monic irreducible
/// polynomial of degree m, comparing coefficient tuples constant term first.
///
/// A FiniteField is an immutable handle; copies share the same tables.
class FiniteField {
   public:
    /// Throws Error(kNotPrimePower) unless q = p^m with p prime, m >= 1, and
    /// q <= 2^16.
    static FiniteField create(uint32_t q);

    uint32_t characteristic() const;
    uint32_t degree() const;
    uint32_t order() const;

    /// Coefficients c_0..c_m of the monic modulus (c_m == 1).
    const std::vector<uint32_t> &modulus() const;

    FieldElement element(uint32_t value) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// All q elements in encoding order, starting with zero.
    std::vector<FieldElement> elements() const;

    // Arithmetic on raw encodings. Inputs must be < order().
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t exponent) const;

    bool operator==(const FiniteField &other) const;

   private:
    explicit FiniteField(std::shared_ptr<const detail::FieldTables> tables);
    std::shared_ptr<const detail::FieldTables> tables_;
};

class FieldElement {
   public:
    FieldElement(FiniteField field, uint32_t value);

    uint32_t value() const {
        return value_;
    }
    const FiniteField &field() const {
        return field_;
    }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator/(const FieldElement &other) const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t exponent) const;

    bool operator==(const FieldElement &other) const;

   private:
    void check_same_field(const FieldElement &other) const;

    FiniteField field_;
    uint32_t value_;
};

FieldElement add(const FieldElement &a, const FieldElement &b);
FieldElement mul(const FieldElement &a, const FieldElement &b);
/// Throws Error(kDivisionByZero) for the zero element.
FieldElement inv(const FieldElement &a);

/// Returns (p, m) with q = p^m, or (0, 0) when q is not a prime power.
std::pair<uint32_t, uint32_t> prime_power_decomposition(uint64_t q);
bool is_prime(uint64_t n);

}  // namespace kuniform

#endif
