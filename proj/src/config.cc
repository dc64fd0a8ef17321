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

#include "qld/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qld/bounds.h"
#include "qld/errors.h"

namespace qld {

namespace {

const std::vector<std::string> kDerivedKeys = {"threshold",   "J",           "eta_eps",        "sigma",
                                               "repetitions", "list_size_bound", "query_bound"};

const std::vector<std::string> kCodes = {"had", "peq", "sls", "sls-negated", "table"};
const std::vector<std::string> kNoise = {"perfect", "symmetric", "adversarial-table", "predictor", "uniform"};

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

uint64_t parse_u64(const std::string &key, const std::string &v) {
    uint64_t out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
        throw ConfigError("config key '" + key + "': expected a nonnegative integer, got '" + v + "'");
    }
    return out;
}

double parse_double(const std::string &key, const std::string &v) {
    double out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
    }
    return out;
}

double parse_unit(const std::string &key, const std::string &v) {
    double out = parse_double(key, v);
    if (out < 0.0 || out > 1.0) {
        throw ConfigError("config key '" + key + "' must lie in [0, 1], got " + v);
    }
    return out;
}

std::string parse_choice(const std::string &key, const std::string &v, const std::vector<std::string> &choices) {
    if (std::find(choices.begin(), choices.end(), v) == choices.end()) {
        std::string all;
        for (const std::string &c : choices) {
            all += (all.empty() ? "" : ", ") + c;
        }
        throw ConfigError("config key '" + key + "': '" + v + "' is not one of " + all);
    }
    return v;
}

uint64_t parse_bounded(const std::string &key, const std::string &v, uint64_t lo, uint64_t hi) {
    uint64_t out = parse_u64(key, v);
    if (out < lo || out > hi) {
        throw ConfigError("config key '" + key + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "], got " + v);
    }
    return out;
}

}  // namespace

const std::vector<std::string> &config_keys() {
    static const std::vector<std::string> keys = {
        "code",  "q",     "n",      "p",      "M",     "d",       "x",      "y",
        "k",     "length", "noise", "rate",   "eps",   "delta",   "nu",     "trials",
        "seed",  "threads", "out",  "table",  "oracle-table", "function",
    };
    return keys;
}

void ExperimentConfig::set(const std::string &key, const std::string &raw) {
    std::string v = trim(raw);
    if (key == "code") {
        code = parse_choice(key, v, kCodes);
    } else if (key == "q") {
        q = parse_bounded(key, v, 2, 1000000);
    } else if (key == "n") {
        n = parse_bounded(key, v, 1, 62);
    } else if (key == "p") {
        p = parse_bounded(key, v, 3, 1000000);
    } else if (key == "M") {
        m = parse_bounded(key, v, 1, uint64_t{1} << 32);
    } else if (key == "d") {
        d = parse_u64(key, v);
    } else if (key == "x") {
        x = parse_u64(key, v);
    } else if (key == "y") {
        y = parse_u64(key, v);
    } else if (key == "k") {
        k = parse_bounded(key, v, 1, 1000000);
    } else if (key == "length") {
        length = parse_u64(key, v);
    } else if (key == "noise") {
        noise = parse_choice(key, v, kNoise);
    } else if (key == "rate") {
        rate = parse_unit(key, v);
    } else if (key == "eps") {
        eps = parse_unit(key, v);
    } else if (key == "delta") {
        delta = parse_unit(key, v);
    } else if (key == "nu") {
        nu = parse_unit(key, v);
    } else if (key == "trials") {
        trials = parse_bounded(key, v, 1, 1000000);
    } else if (key == "seed") {
        seed = parse_u64(key, v);
    } else if (key == "threads") {
        threads = parse_bounded(key, v, 1, 256);
    } else if (key == "out") {
        out = v;
    } else if (key == "table") {
        table = v;
    } else if (key == "oracle-table") {
        oracle_table = v;
    } else if (key == "function") {
        function = v;
    } else if (std::find(kDerivedKeys.begin(), kDerivedKeys.end(), key) != kDerivedKeys.end()) {
        // Derived by the bounds command; recomputed, never read.
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig ExperimentConfig::parse(std::istream &in) {
    ExperimentConfig cfg;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected `key = value`");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key or value");
        }
        cfg.set(key, value);
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse(in);
}

void ExperimentConfig::merge(const ExperimentConfig &o) {
    auto take = [](auto &dst, const auto &src) {
        if (src) {
            dst = src;
        }
    };
    take(code, o.code);
    take(q, o.q);
    take(n, o.n);
    take(p, o.p);
    take(m, o.m);
    take(d, o.d);
    take(x, o.x);
    take(y, o.y);
    take(k, o.k);
    take(length, o.length);
    take(noise, o.noise);
    take(rate, o.rate);
    take(eps, o.eps);
    take(delta, o.delta);
    take(nu, o.nu);
    take(trials, o.trials);
    take(seed, o.seed);
    take(threads, o.threads);
    take(out, o.out);
    take(table, o.table);
    take(oracle_table, o.oracle_table);
    take(function, o.function);
}

namespace {

void emit(std::ostringstream &s, const std::string &prefix, const char *key, const std::optional<std::string> &v) {
    if (v) {
        s << prefix << key << " = " << *v << "\n";
    }
}
void emit(std::ostringstream &s, const std::string &prefix, const char *key, const std::optional<uint64_t> &v) {
    if (v) {
        s << prefix << key << " = " << *v << "\n";
    }
}
void emit(std::ostringstream &s, const std::string &prefix, const char *key, const std::optional<double> &v) {
    if (v) {
        s << prefix << key << " = " << format_double(*v) << "\n";
    }
}

std::string render(const ExperimentConfig &c, const std::string &prefix, bool execution_keys) {
    std::ostringstream s;
    emit(s, prefix, "code", c.code);
    emit(s, prefix, "q", c.q);
    emit(s, prefix, "n", c.n);
    emit(s, prefix, "p", c.p);
    emit(s, prefix, "M", c.m);
    emit(s, prefix, "d", c.d);
    emit(s, prefix, "x", c.x);
    emit(s, prefix, "y", c.y);
    emit(s, prefix, "k", c.k);
    emit(s, prefix, "length", c.length);
    emit(s, prefix, "noise", c.noise);
    emit(s, prefix, "rate", c.rate);
    emit(s, prefix, "eps", c.eps);
    emit(s, prefix, "delta", c.delta);
    emit(s, prefix, "nu", c.nu);
    emit(s, prefix, "trials", c.trials);
    emit(s, prefix, "seed", c.seed);
    if (execution_keys) {
        emit(s, prefix, "threads", c.threads);
        emit(s, prefix, "out", c.out);
    }
    emit(s, prefix, "table", c.table);
    emit(s, prefix, "oracle-table", c.oracle_table);
    emit(s, prefix, "function", c.function);
    return s.str();
}

}  // namespace

std::string ExperimentConfig::serialize() const {
    return render(*this, "", true);
}

std::string ExperimentConfig::provenance_header() const {
    return render(*this, "# ", false);
}

}  // namespace qld
