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

#include "qld/rng.h"

#include <cmath>
#include <numbers>

#include "qld/errors.h"

namespace qld {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t seed_for(uint64_t master, uint64_t trial, uint64_t stream) {
    uint64_t s = splitmix64(master + (trial + 1) * 0x9E3779B97F4A7C15ULL);
    return splitmix64(s ^ ((stream + 1) * 0xBF58476D1CE4E5B9ULL));
}

Rng make_rng(uint64_t master, uint64_t trial, uint64_t stream) {
    return Rng(seed_for(master, trial, stream));
}

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t uniform_below(Rng &rng, uint64_t n) {
    if (n == 0) {
        throw InvalidArgument("uniform_below: n must be >= 1");
    }
    // Reject the top partial block so every residue is equally likely.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

double standard_normal(Rng &rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace qld
