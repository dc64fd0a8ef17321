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

#include "qld/listdec.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qld/errors.h"
#include "qld/kernels.h"
#include "qld/stategen.h"

namespace qld {

namespace {

constexpr uint64_t kMaxToyMessages = 256;

void check_compatible(const CorruptedCodewordOracle &oracle, const CodeInstance &code) {
    if (oracle.q() != code.q() || oracle.block_length() != code.block_length()) {
        throw DimensionMismatch("oracle (q=" + std::to_string(oracle.q()) + ", M=" +
                                std::to_string(oracle.block_length()) + ") does not match code " + code.describe());
    }
}

// Label distribution after applying the decoder to the index register of
// psi and tracing out symbol and garbage.
std::vector<double> index_distribution(const CodewordStateDecoder &decoder, uint64_t k, const StateVector &psi) {
    const std::vector<size_t> &shape = psi.factor_shape();
    size_t m = shape[0];
    size_t b = psi.dim() / m;
    const LinearOp &u = decoder.stage(k);
    std::vector<double> probs(u.rows(), 0.0);
    std::vector<Complex> slice(m);
    std::vector<double> part(u.rows());
    for (size_t c = 0; c < b; c++) {
        bool any = false;
        for (size_t r = 0; r < m; r++) {
            slice[r] = psi[r * b + c];
            any = any || slice[r] != Complex{};
        }
        if (!any) {
            continue;
        }
        std::vector<Complex> out = u.apply(slice);
        kernels::abs2(out, part);
        for (size_t j = 0; j < part.size(); j++) {
            probs[j] += part[j];
        }
    }
    double total = 0;
    for (double p : probs) {
        total += p;
    }
    if (total > 1.0 + kNormTolerance) {
        throw InvalidArgument(decoder.name() + " decoder is non-contractive on this input (mass " +
                              std::to_string(total) + "); outcomes cannot be sampled");
    }
    return probs;
}

}  // namespace

uint64_t code_distance(const CodeInstance &code) {
    switch (code.family()) {
        case CodeFamily::hadamard:
            return code.block_length() / code.q() * (code.q() - 1);
        case CodeFamily::pairwise_equality:
            return code.block_length() / 2;
        default:
            return min_distance(code);
    }
}

ListDecodeResult list_decode(const CorruptedCodewordOracle &oracle, const CodewordStateDecoder &decoder, double eps,
                             double delta, uint64_t d, Rng &rng, uint64_t seed) {
    const CodeInstance &code = decoder.code();
    check_compatible(oracle, code);
    if (d == 0) {
        d = code_distance(code);
    }
    ListDecodeResult result;
    result.seed = seed;
    result.params = BoundsReport::compute(code.block_length(), code.q(), d, eps, delta, decoder.nu());
    if (!result.params.usable) {
        throw DecoderInapplicable("sigma = " + format_double(result.params.sigma) +
                                      " is not positive; the decoder gives no per-round guarantee",
                                  result.params.sigma);
    }
    for (uint64_t k = 1; k < code.q(); k++) {
        if (!decoder.supports(k)) {
            throw InvalidArgument(decoder.name() + " decoder has no stage for k = " + std::to_string(k));
        }
    }
    CorruptedCodewordOracle local = oracle.clone();
    uint64_t t = result.params.repetitions;
    for (uint64_t k = 1; k < code.q(); k++) {
        for (uint64_t it = 0; it < t; it++) {
            PsiState psi = generate_psi(local, k);
            std::vector<double> probs = index_distribution(decoder, k, psi.state);
            std::optional<size_t> label = sample_outcome(probs, rng);
            RawOutcome o{k, it, std::nullopt, std::nullopt, local.query_count()};
            if (label) {
                o.label = *label;
                o.message = decoder.postprocess(k, *label);
                if (o.message && *o.message >= code.message_count()) {
                    o.message.reset();
                }
            }
            if (o.message) {
                result.candidate_list.push_back(*o.message);
            }
            result.raw_outcomes.push_back(o);
        }
    }
    std::sort(result.candidate_list.begin(), result.candidate_list.end());
    result.candidate_list.erase(std::unique(result.candidate_list.begin(), result.candidate_list.end()),
                                result.candidate_list.end());
    result.query_count = local.query_count();
    return result;
}

std::vector<uint64_t> above_threshold(const CorruptedCodewordOracle &oracle, const CodeInstance &code, double eps) {
    double level = 1.0 / static_cast<double>(code.q()) + eps;
    std::vector<uint64_t> out;
    for (uint64_t x = 0; x < code.message_count(); x++) {
        if (presence(oracle, code, x) >= level) {
            out.push_back(x);
        }
    }
    return out;
}

bool validate_list(const CorruptedCodewordOracle &oracle, const CodeInstance &code, double eps,
                   const ListDecodeResult &result) {
    for (uint64_t x : above_threshold(oracle, code, eps)) {
        if (!std::binary_search(result.candidate_list.begin(), result.candidate_list.end(), x)) {
            return false;
        }
    }
    return true;
}

std::optional<RoundFloorCheck> round_success_floor(const CorruptedCodewordOracle &oracle,
                                                  const CodewordStateDecoder &decoder, uint64_t x, uint64_t k,
                                                  double eps) {
    const CodeInstance &code = decoder.code();
    check_compatible(oracle, code);
    double eta = eta_eps(code.q(), eps);
    if (std::abs(kappa(oracle, code, x, k)) < eta) {
        return std::nullopt;
    }
    double s = sigma(decoder.nu(), eta).value;
    PsiState psi = generate_psi(oracle.clone(), k);
    std::vector<double> probs = index_distribution(decoder, k, psi.state);
    double p = 0;
    for (uint64_t j = 0; j < probs.size(); j++) {
        std::optional<uint64_t> m = decoder.postprocess(k, j);
        if (m && *m == x) {
            p += probs[j];
        }
    }
    return RoundFloorCheck{p, s, p >= s - kNormTolerance};
}

InvertResult invert_demo(const UnitaryMap &predictor, const CodewordStateDecoder &decoder,
                         const std::vector<uint64_t> &function_table, uint64_t y, double eps, double delta,
                         Rng &rng, uint64_t seed) {
    const CodeInstance &code = decoder.code();
    uint64_t n = code.message_count();
    if (n > kMaxToyMessages) {
        throw CapacityError("invert_demo: toy functions are limited to 256 messages");
    }
    if (function_table.size() != n) {
        throw DimensionMismatch("invert_demo: function table has " + std::to_string(function_table.size()) +
                                " entries, code has " + std::to_string(n) + " messages");
    }
    uint64_t base = code.block_length() * code.q();
    if (predictor.dim() % base != 0) {
        throw DimensionMismatch("invert_demo: predictor dim is not a multiple of M*q");
    }
    uint64_t g_dim = predictor.dim() / base;
    size_t bits = 0;
    while ((uint64_t{1} << bits) < g_dim) {
        bits++;
    }
    if ((uint64_t{1} << bits) != g_dim) {
        throw DimensionMismatch("invert_demo: garbage dimension is not a power of two");
    }
    CorruptedCodewordOracle oracle =
        CorruptedCodewordOracle::from_predictor(predictor, code.q(), code.block_length(), bits);
    InvertResult out{std::nullopt, list_decode(oracle, decoder, eps, delta, 0, rng, seed)};
    for (uint64_t x : out.decode.candidate_list) {
        if (function_table[x] == y) {
            out.preimage = x;
            break;
        }
    }
    return out;
}

void write_outcome_header(std::ostream &out) {
    out << "run_id,k,iteration,outcome_label,is_valid_message,cumulative_queries\n";
}

void write_outcome_rows(std::ostream &out, uint64_t run_id, const ListDecodeResult &result) {
    for (const RawOutcome &o : result.raw_outcomes) {
        out << run_id << "," << o.k << "," << o.iteration << ",";
        if (o.label) {
            out << *o.label;
        } else {
            out << -1;
        }
        out << "," << (o.message ? 1 : 0) << "," << o.cumulative_queries << "\n";
    }
}

}  // namespace qld
