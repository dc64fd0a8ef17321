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

#ifndef QLD_ORACLE_H
#define QLD_ORACLE_H

#include <atomic>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "qld/codes.h"
#include "qld/rng.h"
#include "qld/state.h"

namespace qld {

constexpr size_t kMaxGarbageBits = 8;

/// Designated amplitudes of an oracle: alpha_{r,s} and garbage states phi_{r,s}.
///
/// alpha is M*q row-major (r, s); phi is M*q*2^l row-major (r, s, g).
/// phi_{r,s} is ignored where alpha_{r,s} = 0.
struct AmplitudeTable {
    uint64_t q = 2;
    uint64_t block_length = 0;
    size_t garbage_bits = 0;
    std::vector<Complex> alpha;
    std::vector<Complex> phi;

    size_t garbage_dim() const {
        return size_t{1} << garbage_bits;
    }

    /// alpha one-hot at symbols[r], garbage |0>.
    static AmplitudeTable classical(uint64_t q, std::span<const Symbol> symbols);
};

/// Text format: header `q M l`, then `r s re im [2 * 2^l reals for phi]` per
/// nonzero alpha; '#' starts a comment. Missing phi means |0^l>.
AmplitudeTable read_amplitude_table(std::istream &in);
void write_amplitude_table(std::ostream &out, const AmplitudeTable &table);

/// Quantumly corrupted codeword: one unitary block V_r on symbol (x) garbage
/// per index r. State layout is (index, symbol, garbage), index most
/// significant. Symbol addition is mod q.
class CorruptedCodewordOracle {
   public:
    static CorruptedCodewordOracle from_perfect(const CodeInstance &code, uint64_t x);
    /// Each position independently replaced with probability rho by a uniform wrong symbol.
    static CorruptedCodewordOracle from_symmetric_noise(const CodeInstance &code, uint64_t x, double rho, Rng &rng);
    /// Classical word: V_r|u>|g> = |u + symbols[r]>|g>.
    static CorruptedCodewordOracle from_symbols(uint64_t q, std::vector<Symbol> symbols, size_t garbage_bits = 0);
    /// Completes each designated column to a unitary block. Throws InvalidTable
    /// on normalization failure.
    static CorruptedCodewordOracle from_amplitude_table(const AmplitudeTable &table);
    /// Throws InvalidPredictor if the map moves amplitude between index values.
    static CorruptedCodewordOracle from_predictor(const UnitaryMap &predictor, uint64_t q, uint64_t block_length,
                                                  size_t garbage_bits = 0);

    CorruptedCodewordOracle(CorruptedCodewordOracle &&) = default;
    CorruptedCodewordOracle &operator=(CorruptedCodewordOracle &&) = default;

    /// Same blocks, fresh query counter.
    CorruptedCodewordOracle clone() const;

    uint64_t q() const {
        return data_->q;
    }
    uint64_t block_length() const {
        return data_->block_length;
    }
    size_t garbage_bits() const {
        return data_->garbage_bits;
    }
    size_t garbage_dim() const {
        return size_t{1} << data_->garbage_bits;
    }
    /// q * 2^l
    size_t block_dim() const {
        return q() * garbage_dim();
    }
    /// M * q * 2^l
    size_t state_dim() const {
        return block_length() * block_dim();
    }
    std::vector<size_t> state_shape() const {
        return {block_length(), q(), garbage_dim()};
    }

    Complex alpha(uint64_t r, uint64_t s) const;
    std::span<const Complex> garbage_state(uint64_t r, uint64_t s) const;
    const AmplitudeTable &amplitudes() const {
        return data_->table;
    }
    /// Symbol table when every block is a classical shift.
    std::optional<std::vector<Symbol>> classical_symbols() const;

    /// V_r as a dense row-major block_dim x block_dim matrix; rows and columns indexed (u, g).
    std::vector<Complex> block_matrix(uint64_t r) const;

    /// Block-diagonal unitary over the whole register; the inverse of from_predictor.
    UnitaryMap as_unitary() const;

    StateVector apply_oracle(const StateVector &s) const;
    StateVector apply_inverse(const StateVector &s) const;
    /// Calls to apply_oracle plus apply_inverse.
    uint64_t query_count() const {
        return counter_->load();
    }

   private:
    struct Block {
        Symbol shift = 0;
        bool is_shift = true;
        std::vector<Complex> matrix;
    };
    struct Data {
        uint64_t q = 2;
        uint64_t block_length = 0;
        size_t garbage_bits = 0;
        std::vector<Block> blocks;
        AmplitudeTable table;
    };

    explicit CorruptedCodewordOracle(std::shared_ptr<const Data> data);
    void check_state(const StateVector &s) const;

    std::shared_ptr<const Data> data_;
    std::unique_ptr<std::atomic<uint64_t>> counter_;
};

/// (1/M) sum_r |alpha_{r, C_x(r)}|^2
double presence(const CorruptedCodewordOracle &oracle, const CodeInstance &code, uint64_t x);

/// Presence as <v, c_x> / M where v is the real qM vector with block r equal
/// to (|alpha_{r,0}|^2, ..., |alpha_{r,q-1}|^2) and c_x is the one-hot encoding of C_x.
double presence_via_vector(const CorruptedCodewordOracle &oracle, const CodeInstance &code, uint64_t x);

/// Amplitude table whose every row is the uniform superposition over symbols.
AmplitudeTable uniform_amplitude_table(uint64_t q, uint64_t block_length);

/// Predictor for C_x whose correct-symbol probability p_r varies with r and
/// averages exactly 1 - rho. Indices are paired by a seeded permutation and
/// each pair gets p = (1 - rho) +/- min(rho, 1 - rho) / 2; an odd leftover
/// gets 1 - rho. Wrong symbols share the remaining mass evenly. l = 0.
UnitaryMap noisy_predictor(const CodeInstance &code, uint64_t x, double rho, Rng &rng);

/// Predictor with the same block for every r, sending |0> to the uniform
/// symbol superposition. Presence 1/q for every message.
UnitaryMap uniform_predictor(uint64_t q, uint64_t block_length);

}  // namespace qld

#endif
