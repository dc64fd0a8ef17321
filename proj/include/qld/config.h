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

#ifndef QLD_CONFIG_H
#define QLD_CONFIG_H

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace qld {

/// Resolved experiment parameters. Keys match the CLI flags without the
/// leading dashes; unset keys stay nullopt.
struct ExperimentConfig {
    std::optional<std::string> code;  // had | peq | sls | sls-negated | table
    std::optional<uint64_t> q;
    std::optional<uint64_t> n;
    std::optional<uint64_t> p;
    std::optional<uint64_t> m;
    std::optional<uint64_t> d;
    std::optional<uint64_t> x;
    std::optional<uint64_t> y;
    std::optional<uint64_t> k;
    std::optional<uint64_t> length;
    std::optional<std::string> noise;  // perfect | symmetric | adversarial-table | predictor | uniform
    std::optional<double> rate;
    std::optional<double> eps;
    std::optional<double> delta;
    std::optional<double> nu;
    std::optional<uint64_t> trials;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> threads;
    std::optional<std::string> out;
    std::optional<std::string> table;
    std::optional<std::string> oracle_table;
    std::optional<std::string> function;

    /// Sets one key from its textual value. Throws ConfigError for unknown
    /// keys and out-of-range values. Keys that a bounds report derives
    /// (threshold, J, ...) are accepted and ignored.
    void set(const std::string &key, const std::string &value);

    /// `key = value` lines; '#' starts a comment.
    static ExperimentConfig parse(std::istream &in);
    static ExperimentConfig parse_file(const std::string &path);

    /// Fields set in `other` override this one's.
    void merge(const ExperimentConfig &other);

    /// Every set key as `key = value`, in a fixed order. Parses back to an equal config.
    std::string serialize() const;

    /// serialize() minus execution-only keys (threads, out), each line
    /// prefixed with "# ". Used as CSV provenance.
    std::string provenance_header() const;

    bool operator==(const ExperimentConfig &) const = default;
};

/// All keys `set` understands, in serialization order.
const std::vector<std::string> &config_keys();

}  // namespace qld

#endif
