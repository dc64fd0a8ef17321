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

#ifndef QLD_BOUNDS_H
#define QLD_BOUNDS_H

#include <cstdint>
#include <map>
#include <string>

#include "qld/codes.h"
#include "qld/oracle.h"

namespace qld {

/// Absolute tolerance for treating eps as equal to the Johnson threshold.
constexpr double kThresholdTolerance = 1e-12;

/// (1 - 1/q) sqrt(1 - (d/M)(q/(q-1))); the radicand is clamped at 0.
double johnson_threshold(uint64_t m, uint64_t q, uint64_t d);

/// Max number of messages with presence >= 1/q + eps. Throws BoundInapplicable
/// below the threshold; 2M(q-1) - 1 at the threshold.
uint64_t johnson_bound(uint64_t m, uint64_t q, uint64_t d, double eps);

/// (q/(q-1)) eps; throws InvalidArgument unless 0 <= eps <= 1 - 1/q.
double eta_eps(uint64_t q, double eps);

struct SigmaValue {
    double value;
    bool usable;  // value > 0
};

/// 1 - nu - sqrt(1 - eta^2)
SigmaValue sigma(double nu, double eta);

/// ceil((1/sigma)(ln J + ln(1/(1-delta)))), at least 1. delta = 1 drops the log term.
/// Throws DecoderInapplicable for sigma <= 0.
uint64_t repetitions(double sigma_value, uint64_t j, double delta);

/// ceil(((q-1)/sigma)(ln J + ln(1/(1-delta)))), at least 1.
uint64_t list_size_bound(uint64_t q, double sigma_value, uint64_t j, double delta);
uint64_t query_bound(uint64_t q, double sigma_value, uint64_t j, double delta);

/// (1 - eta) M / 2
double distance_from_orthogonality(double eta, uint64_t m);

struct JohnsonCheck {
    uint64_t count;
    uint64_t bound;
    bool pass;
};

/// Counts messages with presence >= 1/q + eps and compares to the bound. N <= 64.
/// d = 0 means compute it by brute force.
JohnsonCheck johnson_brute_check(const CodeInstance &code, const CorruptedCodewordOracle &oracle, double eps,
                                 uint64_t d = 0);

/// Inputs and every derived quantity of the list decoder's parameters.
struct BoundsReport {
    uint64_t m = 0;
    uint64_t q = 2;
    uint64_t d = 0;
    double eps = 0;
    double delta = 0;
    double nu = 0;

    double threshold = 0;
    uint64_t j = 0;
    double eta_eps = 0;
    double sigma = 0;
    bool usable = false;
    uint64_t repetitions = 0;
    uint64_t list_size_bound = 0;
    uint64_t query_bound = 0;

    /// Throws BoundInapplicable below the threshold; sets usable = false
    /// (and zero counts) when sigma <= 0.
    static BoundsReport compute(uint64_t m, uint64_t q, uint64_t d, double eps, double delta, double nu);

    /// `key = value` lines in a fixed order.
    std::string to_kv() const;
    std::map<std::string, std::string> as_map() const;
    static std::string csv_header();
    std::string csv_row() const;
};

/// Shortest round-tripping decimal form of a double.
std::string format_double(double v);

}  // namespace qld

#endif
