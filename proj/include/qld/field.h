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

#ifndef QLD_FIELD_H
#define QLD_FIELD_H

#include <complex>
#include <cstdint>

namespace qld {

using Complex = std::complex<double>;

/// Largest prime accepted by PrimeModulus. Trial division stays cheap below this.
constexpr uint64_t kMaxPrime = 1000000;

bool is_prime(uint64_t m);

/// A prime p <= kMaxPrime, verified on construction.
class PrimeModulus {
   public:
    explicit PrimeModulus(uint64_t p);

    uint64_t value() const {
        return p_;
    }
    bool is_odd() const {
        return p_ != 2;
    }

    /// Reduces any integer (including negatives) into [0, p).
    uint64_t reduce(int64_t a) const;

    bool operator==(const PrimeModulus &) const = default;

   private:
    uint64_t p_;
};

/// Element of F_p for prime p.
class FieldElement {
   public:
    FieldElement(int64_t value, PrimeModulus modulus);

    uint64_t value() const {
        return value_;
    }
    const PrimeModulus &modulus() const {
        return modulus_;
    }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator-() const;
    /// Multiplicative inverse; throws InvalidArgument for zero.
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;

    bool operator==(const FieldElement &other) const = default;

   private:
    void check_same_field(const FieldElement &other) const;

    uint64_t value_;
    PrimeModulus modulus_;
};

uint64_t mod_pow(uint64_t base, uint64_t exponent, uint64_t m);

/// Legendre symbol (a/p) in {-1, 0, +1} by Euler's criterion. p must be an odd prime.
int legendre(int64_t a, uint64_t p);

/// e^{2 pi i k / q}. The exponent is reduced mod q first so large k stays exact.
Complex root_of_unity(uint64_t q, int64_t k);

}  // namespace qld

#endif
