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

#ifndef QLD_LISTDEC_H
#define QLD_LISTDEC_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "qld/bounds.h"
#include "qld/codes.h"
#include "qld/decoders.h"
#include "qld/oracle.h"
#include "qld/rng.h"

namespace qld {

struct RawOutcome {
    uint64_t k;
    uint64_t iteration;
    /// Measured label; nullopt when the decoder rejected.
    std::optional<uint64_t> label;
    /// Postprocessed message, nullopt when the label names no message.
    std::optional<uint64_t> message;
    /// Oracle queries consumed up to and including this iteration.
    uint64_t cumulative_queries;
};

struct ListDecodeResult {
    std::vector<RawOutcome> raw_outcomes;
    /// Sorted, deduplicated messages.
    std::vector<uint64_t> candidate_list;
    uint64_t query_count = 0;
    BoundsReport params;
    uint64_t seed = 0;
};

/// Runs t = repetitions(sigma, J, delta) rounds per k in [1, q): generate the
/// state, apply the decoder, measure, record. sigma uses nu = 1 - eta_floor.
/// Throws DecoderInapplicable when sigma <= 0 and BoundInapplicable below the
/// Johnson threshold. d = 0 means use the code's own distance.
ListDecodeResult list_decode(const CorruptedCodewordOracle &oracle, const CodewordStateDecoder &decoder, double eps,
                             double delta, uint64_t d, Rng &rng, uint64_t seed = 0);

/// d for a code: closed form for HAD and PEQ, brute force otherwise.
uint64_t code_distance(const CodeInstance &code);

/// True iff every message with presence >= 1/q + eps is in the candidate list.
/// White-box: reads the oracle's amplitude table.
bool validate_list(const CorruptedCodewordOracle &oracle, const CodeInstance &code, double eps,
                   const ListDecodeResult &result);

/// Messages with presence >= 1/q + eps.
std::vector<uint64_t> above_threshold(const CorruptedCodewordOracle &oracle, const CodeInstance &code, double eps);

/// Exact probability of observing x after one round with shuffle k. nullopt
/// when |kappa_x^(k)| < eta_eps, where the floor does not apply.
struct RoundFloorCheck {
    double probability;
    double sigma;
    bool holds;
};
std::optional<RoundFloorCheck> round_success_floor(const CorruptedCodewordOracle &oracle,
                                                  const CodewordStateDecoder &decoder, uint64_t x, uint64_t k,
                                                  double eps);

struct InvertResult {
    std::optional<uint64_t> preimage;
    ListDecodeResult decode;
};

/// Toy inversion: list-decode the predictor's oracle, return the first
/// candidate x' (ascending) with f(x') = y.
InvertResult invert_demo(const UnitaryMap &predictor, const CodewordStateDecoder &decoder,
                         const std::vector<uint64_t> &function_table, uint64_t y, double eps, double delta,
                         Rng &rng, uint64_t seed = 0);

/// CSV columns: run_id,k,iteration,outcome_label,is_valid_message,cumulative_queries.
/// outcome_label is -1 on rejection.
void write_outcome_header(std::ostream &out);
void write_outcome_rows(std::ostream &out, uint64_t run_id, const ListDecodeResult &result);

}  // namespace qld

#endif
