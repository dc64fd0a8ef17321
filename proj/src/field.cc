// Copyright 2026 The qlistdec Authors
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

#include "qld/field.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qld/errors.h"

namespace qld {

bool is_prime(uint64_t m) {
    if (m < 2) {
        return false;
    }
    if (m < 4) {
        return true;
    }
    if (m % 2 == 0) {
        return false;
    }
    for (uint64_t d = 3; d * d <= m; d += 2) {
        if (m % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeModulus::PrimeModulus(uint64_t p) : p_(p) {
    if (p > kMaxPrime) {
        throw InvalidModulus("modulus " + std::to_string(p) + " exceeds the supported maximum " +
                             std::to_string(kMaxPrime));
    }
    if (!is_prime(p)) {
        throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
    }
}

uint64_t PrimeModulus::reduce(int64_t a) const {
    auto p = static_cast<int64_t>(p_);
    int64_t r = a % p;
    if (r < 0) {
        r += p;
    }
    return static_cast<uint64_t>(r);
}

FieldElement::FieldElement(int64_t value, PrimeModulus modulus)
    : value_(modulus.reduce(value)), modulus_(modulus) {
}

void FieldElement::check_same_field(const FieldElement &other) const {
    if (modulus_ != other.modulus_) {
        throw InvalidArgument("field elements from different fields");
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(static_cast<int64_t>((value_ + other.value_) % modulus_.value()), modulus_);
}

FieldElement FieldElement::operator-(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(static_cast<int64_t>(value_) - static_cast<int64_t>(other.value_), modulus_);
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    check_same_field(other);
    return FieldElement(static_cast<int64_t>((value_ * other.value_) % modulus_.value()), modulus_);
}

FieldElement FieldElement::operator-() const {
    return FieldElement(-static_cast<int64_t>(value_), modulus_);
}

FieldElement FieldElement::pow(uint64_t e) const {
    return FieldElement(static_cast<int64_t>(mod_pow(value_, e, modulus_.value())), modulus_);
}

FieldElement FieldElement::inverse() const {
    if (value_ == 0) {
        throw InvalidArgument("zero has no multiplicative inverse");
    }
    // Fermat: a^(p-2) = a^-1.
    return pow(modulus_.value() - 2);
}

uint64_t mod_pow(uint64_t base, uint64_t exponent, uint64_t m) {
    if (m == 1) {
        return 0;
    }
    // m <= kMaxPrime in practice, but use 128-bit products so any 64-bit modulus works.
    unsigned __int128 result = 1;
    unsigned __int128 b = base % m;
    while (exponent > 0) {
        if (exponent & 1) {
            result = (result * b) % m;
        }
        b = (b * b) % m;
        exponent >>= 1;
    }
    return static_cast<uint64_t>(result);
}

int legendre(int64_t a, uint64_t p) {
    PrimeModulus modulus(p);
    if (!modulus.is_odd()) {
        throw InvalidModulus("Legendre symbol needs an odd prime, got 2");
    }
    uint64_t r = modulus.reduce(a);
    if (r == 0) {
        return 0;
    }
    uint64_t e = mod_pow(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

Complex root_of_unity(uint64_t q, int64_t k) {
    if (q == 0) {
        throw InvalidArgument("root_of_unity: q must be >= 1");
    }
    auto qq = static_cast<int64_t>(q);
    int64_t r = k % qq;
    if (r < 0) {
        r += qq;
    }
    // Exact values at the quarter turns: omega_4 = i, omega_2 = -1.
    if (r == 0) {
        return {1.0, 0.0};
    }
    if (2 * r == qq) {
        return {-1.0, 0.0};
    }
    if (4 * r == qq) {
        return {0.0, 1.0};
    }
    if (4 * r == 3 * qq) {
        return {0.0, -1.0};
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace qld
