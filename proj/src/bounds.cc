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

#include "qld/bounds.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "qld/errors.h"

namespace qld {

namespace {

constexpr uint64_t kMaxBruteMessages = 64;
// Guards the floor against values like 3.9999999999999996.
constexpr double kFloorSlack = 1e-9;

double log_term(uint64_t j, double delta) {
    if (j == 0) {
        throw InvalidArgument("J must be >= 1");
    }
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw InvalidArgument("delta must lie in [0, 1]");
    }
    double conf = delta >= 1.0 ? 0.0 : std::log(1.0 / (1.0 - delta));
    return std::log(static_cast<double>(j)) + conf;
}

uint64_t clamped_ceil(double v) {
    double c = std::ceil(v - kFloorSlack);
    return c < 1.0 ? 1 : static_cast<uint64_t>(c);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double johnson_threshold(uint64_t m, uint64_t q, uint64_t d) {
    if (m == 0 || q < 2) {
        throw InvalidArgument("johnson_threshold: need M >= 1 and q >= 2");
    }
    if (d > m) {
        throw InvalidArgument("johnson_threshold: d must not exceed M");
    }
    double qd = static_cast<double>(q);
    double radicand = 1.0 - (static_cast<double>(d) / static_cast<double>(m)) * (qd / (qd - 1.0));
    return (1.0 - 1.0 / qd) * std::sqrt(std::max(radicand, 0.0));
}

uint64_t johnson_bound(uint64_t m, uint64_t q, uint64_t d, double eps) {
    double threshold = johnson_threshold(m, q, d);
    if (eps < threshold - kThresholdTolerance) {
        throw BoundInapplicable("eps = " + format_double(eps) + " is below the Johnson threshold " +
                                    format_double(threshold),
                                threshold);
    }
    double md = static_cast<double>(m);
    double qd = static_cast<double>(q);
    if (std::abs(eps - threshold) <= kThresholdTolerance) {
        return 2 * m * (q - 1) - 1;
    }
    double a = 1.0 - 1.0 / qd;
    double dd = static_cast<double>(d);
    double denom = md * eps * eps + a * (dd - md * a);
    double cap = md * (qd - 1.0);
    double value = denom > 0 ? std::min(cap, dd * a / denom) : cap;
    return static_cast<uint64_t>(std::floor(value + kFloorSlack));
}

double eta_eps(uint64_t q, double eps) {
    if (q < 2) {
        throw InvalidArgument("eta_eps: q must be >= 2");
    }
    double qd = static_cast<double>(q);
    if (!(eps >= 0.0 && eps <= 1.0 - 1.0 / qd + kThresholdTolerance)) {
        throw InvalidArgument("eta_eps: eps = " + format_double(eps) + " outside [0, 1 - 1/q]");
    }
    return std::min(qd / (qd - 1.0) * eps, 1.0);
}

SigmaValue sigma(double nu, double eta) {
    if (!(nu >= 0.0 && nu <= 1.0) || !(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("sigma: nu and eta must lie in [0, 1]");
    }
    double v = 1.0 - nu - std::sqrt(1.0 - eta * eta);
    return {v, v > 0};
}

uint64_t repetitions(double sigma_value, uint64_t j, double delta) {
    if (!(sigma_value > 0)) {
        throw DecoderInapplicable("sigma = " + format_double(sigma_value) + " is not positive", sigma_value);
    }
    return clamped_ceil(log_term(j, delta) / sigma_value);
}

uint64_t list_size_bound(uint64_t q, double sigma_value, uint64_t j, double delta) {
    if (!(sigma_value > 0)) {
        throw DecoderInapplicable("sigma = " + format_double(sigma_value) + " is not positive", sigma_value);
    }
    return clamped_ceil(static_cast<double>(q - 1) / sigma_value * log_term(j, delta));
}

uint64_t query_bound(uint64_t q, double sigma_value, uint64_t j, double delta) {
    return 2 * list_size_bound(q, sigma_value, j, delta);
}

double distance_from_orthogonality(double eta, uint64_t m) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("distance_from_orthogonality: eta must lie in [0, 1]");
    }
    return (1.0 - eta) * static_cast<double>(m) / 2.0;
}

JohnsonCheck johnson_brute_check(const CodeInstance &code, const CorruptedCodewordOracle &oracle, double eps,
                                 uint64_t d) {
    if (code.message_count() > kMaxBruteMessages) {
        throw CapacityError("johnson_brute_check: N exceeds 64");
    }
    if (d == 0) {
        d = min_distance(code);
    }
    uint64_t bound = johnson_bound(code.block_length(), code.q(), d, eps);
    double level = 1.0 / static_cast<double>(code.q()) + eps;
    uint64_t count = 0;
    for (uint64_t x = 0; x < code.message_count(); x++) {
        count += presence(oracle, code, x) >= level;
    }
    return {count, bound, count <= bound};
}

BoundsReport BoundsReport::compute(uint64_t m, uint64_t q, uint64_t d, double eps, double delta, double nu) {
    BoundsReport r;
    r.m = m;
    r.q = q;
    r.d = d;
    r.eps = eps;
    r.delta = delta;
    r.nu = nu;
    r.threshold = johnson_threshold(m, q, d);
    r.j = johnson_bound(m, q, d, eps);
    r.eta_eps = qld::eta_eps(q, eps);
    SigmaValue s = qld::sigma(nu, r.eta_eps);
    r.sigma = s.value;
    r.usable = s.usable;
    if (s.usable) {
        r.repetitions = qld::repetitions(s.value, r.j, delta);
        r.list_size_bound = qld::list_size_bound(q, s.value, r.j, delta);
        r.query_bound = qld::query_bound(q, s.value, r.j, delta);
    }
    return r;
}

std::map<std::string, std::string> BoundsReport::as_map() const {
    return {
        {"M", std::to_string(m)},
        {"q", std::to_string(q)},
        {"d", std::to_string(d)},
        {"eps", format_double(eps)},
        {"delta", format_double(delta)},
        {"nu", format_double(nu)},
        {"threshold", format_double(threshold)},
        {"J", std::to_string(j)},
        {"eta_eps", format_double(eta_eps)},
        {"sigma", format_double(sigma)},
        {"repetitions", std::to_string(repetitions)},
        {"list_size_bound", std::to_string(list_size_bound)},
        {"query_bound", std::to_string(query_bound)},
    };
}

namespace {

const std::vector<std::string> &report_keys() {
    static const std::vector<std::string> keys = {"M",       "q",     "d",           "eps",
                                                  "delta",   "nu",    "threshold",   "J",
                                                  "eta_eps", "sigma", "repetitions", "list_size_bound",
                                                  "query_bound"};
    return keys;
}

}  // namespace

std::string BoundsReport::to_kv() const {
    std::map<std::string, std::string> values = as_map();
    std::ostringstream out;
    for (const std::string &k : report_keys()) {
        out << k << " = " << values[k] << "\n";
    }
    return out.str();
}

std::string BoundsReport::csv_header() {
    std::string h;
    for (const std::string &k : report_keys()) {
        if (!h.empty()) {
            h += ",";
        }
        h += k;
    }
    return h;
}

std::string BoundsReport::csv_row() const {
    std::map<std::string, std::string> values = as_map();
    std::string row;
    for (const std::string &k : report_keys()) {
        if (!row.empty()) {
            row += ",";
        }
        row += values[k];
    }
    return row;
}

}  // namespace qld
