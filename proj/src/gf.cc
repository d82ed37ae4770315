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

#include "kuniform/gf.h"

#include <sstream>

#include "kuniform/error.h"

namespace kuniform {

namespace {

constexpr uint32_t kMaxOrder = 1u << 16;

using Poly = std::vector<uint32_t>;  // coefficients, constant term first

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// Remainder of a modulo a monic polynomial g over GF(p).
Poly poly_mod(Poly a, const Poly &g, uint32_t p) {
    trim(a);
    size_t dg = g.size() - 1;
    while (a.size() > dg) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dg;
        for (size_t i = 0; i <= dg; i++) {
            uint32_t t = (uint32_t)(((uint64_t)lead * g[i]) % p);
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
        trim(a);
    }
    return a;
}

Poly digits_of(uint32_t v, uint32_t p, uint32_t m) {
    Poly out(m);
    for (uint32_t i = 0; i < m; i++) {
        out[i] = v % p;
        v /= p;
    }
    return out;
}

uint32_t value_of(const Poly &a, uint32_t p) {
    uint32_t v = 0;
    for (size_t i = a.size(); i-- > 0;) {
        v = v * p + a[i];
    }
    return v;
}

Poly poly_mul_mod(const Poly &a, const Poly &b, const Poly &modulus, uint32_t p) {
    Poly prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < b.size(); j++) {
            prod[i + j] = (uint32_t)((prod[i + j] + (uint64_t)a[i] * b[j]) % p);
        }
    }
    return poly_mod(std::move(prod), modulus, p);
}

bool is_irreducible(const Poly &f, uint32_t p) {
    uint32_t m = (uint32_t)f.size() - 1;
    for (uint32_t deg = 1; deg <= m / 2; deg++) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < deg; i++) {
            count *= p;
        }
        for (uint64_t t = 0; t < count; t++) {
            Poly g = digits_of((uint32_t)t, p, deg);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

Poly smallest_irreducible(uint32_t p, uint32_t m) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; i++) {
        count *= p;
    }
    for (uint64_t t = 0; t < count; t++) {
        // Constant term is the most significant position of the ordering.
        Poly f(m + 1);
        uint64_t rest = t;
        for (uint32_t i = m; i-- > 0;) {
            f[i] = (uint32_t)(rest % p);
            rest /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) {
            return f;
        }
    }
    throw Error(ErrorCode::kNotPrimePower, "no irreducible polynomial found");
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t f = 2; f * f <= n; f++) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) {
                n /= f;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

}  // namespace

namespace detail {

struct FieldTables {
    uint32_t p;
    uint32_t m;
    uint32_t q;
    Poly modulus;
    std::vector<uint32_t> exp;  // length 2(q-1): exp[i] = g^i
    std::vector<uint32_t> log;  // log[0] unused
    std::vector<uint32_t> place;  // place[i] = p^i

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p == 2) {
            return a ^ b;
        }
        uint32_t out = 0;
        for (uint32_t i = 0; i < m; i++) {
            uint32_t da = a % p;
            uint32_t db = b % p;
            a /= p;
            b /= p;
            out += ((da + db) % p) * place[i];
        }
        return out;
    }

    uint32_t neg(uint32_t a) const {
        if (p == 2) {
            return a;
        }
        uint32_t out = 0;
        for (uint32_t i = 0; i < m; i++) {
            uint32_t da = a % p;
            a /= p;
            out += ((p - da) % p) * place[i];
        }
        return out;
    }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp[log[a] + log[b]];
    }
};

}  // namespace detail

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t f = 2; f * f <= n; f++) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

std::pair<uint32_t, uint32_t> prime_power_decomposition(uint64_t q) {
    if (q < 2) {
        return {0, 0};
    }
    auto factors = distinct_prime_factors(q);
    if (factors.size() != 1) {
        return {0, 0};
    }
    uint32_t m = 0;
    while (q > 1) {
        q /= factors[0];
        m++;
    }
    return {(uint32_t)factors[0], m};
}

FiniteField::FiniteField(std::shared_ptr<const detail::FieldTables> tables) : tables_(std::move(tables)) {
}

FiniteField FiniteField::create(uint32_t q) {
    auto [p, m] = prime_power_decomposition(q);
    if (p == 0 || q > kMaxOrder) {
        std::stringstream ss;
        ss << "field order " << q << " is not a prime power in [2, 65536]";
        throw Error(ErrorCode::kNotPrimePower, ss.str());
    }
    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->m = m;
    t->q = q;
    t->modulus = smallest_irreducible(p, m);
    t->place.resize(m);
    uint32_t w = 1;
    for (uint32_t i = 0; i < m; i++) {
        t->place[i] = w;
        w *= p;
    }

    // Find a primitive element by checking its multiplicative order.
    uint32_t n = q - 1;
    auto factors = distinct_prime_factors(n);
    auto slow_pow = [&](uint32_t base, uint64_t e) {
        Poly acc{1};
        Poly b = digits_of(base, p, m);
        while (e > 0) {
            if (e & 1) {
                acc = poly_mul_mod(acc, b, t->modulus, p);
            }
            b = poly_mul_mod(b, b, t->modulus, p);
            e >>= 1;
        }
        return value_of(acc, p);
    };
    uint32_t generator = 1;
    for (uint32_t g = 1; g < q; g++) {
        bool primitive = true;
        for (uint64_t f : factors) {
            if (slow_pow(g, n / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator = g;
            break;
        }
    }

    t->exp.resize(2 * (size_t)n);
    t->log.assign(q, 0);
    Poly g = digits_of(generator, p, m);
    Poly cur{1};
    for (uint32_t i = 0; i < n; i++) {
        uint32_t v = value_of(cur, p);
        t->exp[i] = v;
        t->exp[i + n] = v;
        t->log[v] = i;
        cur = poly_mul_mod(cur, g, t->modulus, p);
    }
    return FiniteField(std::move(t));
}

uint32_t FiniteField::characteristic() const {
    return tables_->p;
}
uint32_t FiniteField::degree() const {
    return tables_->m;
}
uint32_t FiniteField::order() const {
    return tables_->q;
}
const std::vector<uint32_t> &FiniteField::modulus() const {
    return tables_->modulus;
}

FieldElement FiniteField::element(uint32_t value) const {
    return FieldElement(*this, value);
}
FieldElement FiniteField::zero() const {
    return FieldElement(*this, 0);
}
FieldElement FiniteField::one() const {
    return FieldElement(*this, 1);
}

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order());
    for (uint32_t v = 0; v < order(); v++) {
        out.emplace_back(*this, v);
    }
    return out;
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
    return tables_->add(a, b);
}
uint32_t FiniteField::neg(uint32_t a) const {
    return tables_->neg(a);
}
uint32_t FiniteField::sub(uint32_t a, uint32_t b) const {
    return tables_->add(a, tables_->neg(b));
}
uint32_t FiniteField::mul(uint32_t a, uint32_t b) const {
    return tables_->mul(a, b);
}
uint32_t FiniteField::inv(uint32_t a) const {
    if (a == 0) {
        throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
    }
    uint32_t n = tables_->q - 1;
    return tables_->exp[(n - tables_->log[a]) % n];
}
uint32_t FiniteField::pow(uint32_t a, uint64_t exponent) const {
    if (exponent == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    uint64_t n = tables_->q - 1;
    return tables_->exp[(uint64_t)tables_->log[a] * (exponent % n) % n];
}

bool FiniteField::operator==(const FiniteField &other) const {
    return tables_ == other.tables_ || tables_->q == other.tables_->q;
}

FieldElement::FieldElement(FiniteField field, uint32_t value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_.order()) {
        std::stringstream ss;
        ss << "element " << value << " out of range for GF(" << field_.order() << ")";
        throw Error(ErrorCode::kInvalidArgument, ss.str());
    }
}

void FieldElement::check_same_field(const FieldElement &other) const {
    if (!(field_ == other.field_)) {
        std::stringstream ss;
        ss << "cannot combine elements of GF(" << field_.order() << ") and GF(" << other.field_.order() << ")";
        throw Error(ErrorCode::kFieldMismatch, ss.str());
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(field_, field_.add(value_, other.value_));
}
FieldElement FieldElement::operator-(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(field_, field_.sub(value_, other.value_));
}
FieldElement FieldElement::operator-() const {
    return FieldElement(field_, field_.neg(value_));
}
FieldElement FieldElement::operator*(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(field_, field_.mul(value_, other.value_));
}
FieldElement FieldElement::operator/(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(field_, field_.mul(value_, field_.inv(other.value_)));
}
FieldElement FieldElement::inverse() const {
    return FieldElement(field_, field_.inv(value_));
}
FieldElement FieldElement::pow(uint64_t exponent) const {
    return FieldElement(field_, field_.pow(value_, exponent));
}
bool FieldElement::operator==(const FieldElement &other) const {
    return field_ == other.field_ && value_ == other.value_;
}

FieldElement add(const FieldElement &a, const FieldElement &b) {
    return a + b;
}
FieldElement mul(const FieldElement &a, const FieldElement &b) {
    return a * b;
}
FieldElement inv(const FieldElement &a) {
    return a.inverse();
}

}  // namespace kuniform
