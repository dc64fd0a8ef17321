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

#ifndef QLD_RNG_H
#define QLD_RNG_H

#include <cstdint>
#include <random>

namespace qld {

using Rng = std::mt19937_64;

uint64_t splitmix64(uint64_t x);

/// Seed for stream `stream` of trial `trial` under a master seed.
///
///   s = splitmix64(master + (trial + 1) * 0x9E3779B97F4A7C15)
///   seed = splitmix64(s ^ ((stream + 1) * 0xBF58476D1CE4E5B9))
///
/// Counter based, so any trial's stream can be rebuilt without running the
/// trials before it.
uint64_t seed_for(uint64_t master, uint64_t trial, uint64_t stream);

Rng make_rng(uint64_t master, uint64_t trial, uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng &rng);

/// Uniform integer in [0, n), unbiased. n must be >= 1.
uint64_t uniform_below(Rng &rng, uint64_t n);

/// Standard normal via Box-Muller on uniform01 (portable across standard libraries).
double standard_normal(Rng &rng);

}  // namespace qld

#endif
